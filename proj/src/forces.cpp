#include "relast/forces.hpp"

#include <cmath>

namespace relast {

void ForceModel::dead_body(const double* x, int dim, double* out) const {
  switch (profile) {
    case ForceProfile::None:
      for (int i = 0; i < dim; ++i) out[i] = 0.0;
      return;
    case ForceProfile::Constant:
      for (int i = 0; i < dim; ++i) out[i] = dead_vector[static_cast<std::size_t>(i)];
      return;
    case ForceProfile::Sine2d: {
      const double v = amplitude * std::sin(M_PI * x[0]) * std::sin(M_PI * x[1]);
      for (int i = 0; i < dim; ++i) out[i] = v;
      return;
    }
    case ForceProfile::Poly2d: {
      const double v = amplitude * x[0] * (1.0 - x[0]) * x[1] * (1.0 - x[1]);
      for (int i = 0; i < dim; ++i) out[i] = v;
      return;
    }
  }
}

TensorValue body_force_affine(const ForceModel& fm, const TensorValue& xi, const double* dxi_cov,
                              const double* x) {
  const int d = xi.dim();
  TensorValue f(d, {Slot::Cov});
  double dead[3];
  fm.dead_body(x, d, dead);
  for (int i = 0; i < d; ++i) f[i] = dead[i];

  if (fm.has_live_f1)
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) f[i] += fm.live_f1.at({i, k}) * xi[k];
  if (fm.has_live_f2)
    for (int j = 0; j < d; ++j)
      for (int m = 0; m < d; ++m)
        for (int k = 0; k < d; ++k) f[j] += fm.live_f2.at({m, j, k}) * dxi_cov[m * d + k];
  return f;
}

TensorValue dead_force_pullback(const ForceModel& fm, const double* jac, int dim) {
  TensorValue f(dim, {Slot::Cov});
  for (int i = 0; i < dim; ++i) {
    double s = 0.0;
    for (int a = 0; a < dim; ++a) s += jac[a * dim + i] * fm.dead_ambient()[static_cast<std::size_t>(a)];
    f[i] = s;
  }
  return f;
}

NormalTraceResult normal_trace(const TensorValue& T, const MetricValue& g, const double* facet_nodes,
                               const double* inward_point, double carrier_density) {
  const int d = g.dim();
  if (T.rank() != 2 || T.slot(0) != Slot::Contra)
    fail(ErrorKind::Dimension, "normal_trace: T must have a leading contravariant slot");

  // facet edge vectors from the first facet node
  double t[2][3];
  for (int k = 0; k < d - 1; ++k)
    for (int i = 0; i < d; ++i) t[k][i] = facet_nodes[(k + 1) * d + i] - facet_nodes[0 * d + i];

  // conormal: annihilates the facet tangents (independent of the metric)
  double n[3] = {0, 0, 0};
  if (d == 2) {
    n[0] = -t[0][1];
    n[1] = t[0][0];
  } else {
    n[0] = t[0][1] * t[1][2] - t[0][2] * t[1][1];
    n[1] = t[0][2] * t[1][0] - t[0][0] * t[1][2];
    n[2] = t[0][0] * t[1][1] - t[0][1] * t[1][0];
  }
  double nn = 0.0;
  for (int i = 0; i < d; ++i) nn += n[i] * n[i];
  if (!(nn > 0.0)) fail(ErrorKind::Dimension, "normal_trace: degenerate facet");

  // orient outward: n applied to (facet centroid - inward point) must be > 0
  double centroid[3] = {0, 0, 0};
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i) centroid[i] += facet_nodes[k * d + i] / d;
  double pair = 0.0;
  for (int i = 0; i < d; ++i) pair += n[i] * (centroid[i] - inward_point[i]);
  if (pair < 0.0)
    for (int i = 0; i < d; ++i) n[i] = -n[i];

  // unit normal with respect to g: nu^i = ginv n / |n|_{ginv}
  double norm2 = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) norm2 += g.ginv(i, j) * n[i] * n[j];
  const double inv_norm = 1.0 / std::sqrt(norm2);
  double nu_flat[3], nu[3];
  for (int i = 0; i < d; ++i) nu_flat[i] = n[i] * inv_norm;
  for (int i = 0; i < d; ++i) {
    double s = 0.0;
    for (int j = 0; j < d; ++j) s += g.ginv(i, j) * nu_flat[j];
    nu[i] = s;
  }

  NormalTraceResult res;
  res.traction = TensorValue(d, {T.slot(1)});
  for (int s2 = 0; s2 < d; ++s2) {
    double s = 0.0;
    for (int i = 0; i < d; ++i) s += T.at({i, s2}) * nu_flat[i];
    res.traction[s2] = s;
  }

  // facet measure: carrier_density * det[nu | t_1 | ... | t_{d-1}] / (d-1)!
  double det;
  if (d == 2) {
    det = nu[0] * t[0][1] - nu[1] * t[0][0];
  } else {
    det = nu[0] * (t[0][1] * t[1][2] - t[0][2] * t[1][1]) -
          nu[1] * (t[0][0] * t[1][2] - t[0][2] * t[1][0]) +
          nu[2] * (t[0][0] * t[1][1] - t[0][1] * t[1][0]);
    det *= 0.5;
  }
  res.measure = carrier_density * std::abs(det);
  return res;
}

} // namespace relast
