#include "relast/kinematics.hpp"

#include <cmath>
#include <cstring>
#include <string>

namespace relast {

DisplacementField DisplacementField::zero(const Mesh& m) {
  DisplacementField f;
  f.mesh = &m;
  f.values.assign(static_cast<std::size_t>(m.n_nodes()) * m.dim, 0.0);
  return f;
}

void DisplacementField::enforce_gamma1() {
  std::vector<bool> mask = mesh->gamma1_node_mask();
  for (int a = 0; a < mesh->n_nodes(); ++a)
    if (mask[static_cast<std::size_t>(a)])
      for (int c = 0; c < mesh->dim; ++c) values[static_cast<std::size_t>(a) * mesh->dim + c] = 0.0;
}

void NodalDeformation::element_jacobian(int e, double* jac) const {
  const int d = mesh->dim;
  const int* el = mesh->element(e);
  // P1 gradient: solve the affine map through the simplex vertices
  // edges in chart coordinates
  double edge[9], yedge[9];
  const double* x0 = mesh->node(el[0]);
  const double* y0 = node_position(el[0]);
  for (int k = 0; k < d; ++k) {
    const double* xk = mesh->node(el[k + 1]);
    const double* yk = node_position(el[k + 1]);
    for (int i = 0; i < d; ++i) {
      edge[i * d + k] = xk[i] - x0[i];  // column k
      yedge[i * d + k] = yk[i] - y0[i];
    }
  }
  // jac = yedge * edge^{-1}
  double inv[9];
  if (d == 2) {
    const double det = edge[0] * edge[3] - edge[1] * edge[2];
    if (det == 0.0) fail(ErrorKind::ImmersionFailure, "degenerate element");
    inv[0] = edge[3] / det;
    inv[1] = -edge[1] / det;
    inv[2] = -edge[2] / det;
    inv[3] = edge[0] / det;
  } else {
    const double det = edge[0] * (edge[4] * edge[8] - edge[5] * edge[7]) -
                       edge[1] * (edge[3] * edge[8] - edge[5] * edge[6]) +
                       edge[2] * (edge[3] * edge[7] - edge[4] * edge[6]);
    if (det == 0.0) fail(ErrorKind::ImmersionFailure, "degenerate element");
    inv[0] = (edge[4] * edge[8] - edge[5] * edge[7]) / det;
    inv[1] = (edge[2] * edge[7] - edge[1] * edge[8]) / det;
    inv[2] = (edge[1] * edge[5] - edge[2] * edge[4]) / det;
    inv[3] = (edge[5] * edge[6] - edge[3] * edge[8]) / det;
    inv[4] = (edge[0] * edge[8] - edge[2] * edge[6]) / det;
    inv[5] = (edge[2] * edge[3] - edge[0] * edge[5]) / det;
    inv[6] = (edge[3] * edge[7] - edge[4] * edge[6]) / det;
    inv[7] = (edge[1] * edge[6] - edge[0] * edge[7]) / det;
    inv[8] = (edge[0] * edge[4] - edge[1] * edge[3]) / det;
  }
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < d; ++i) {
      double s = 0.0;
      for (int k = 0; k < d; ++k) s += yedge[a * d + k] * inv[k * d + i];
      jac[a * d + i] = s;
    }
}

double NodalDeformation::element_jacobian_det(int e) const {
  const int d = mesh->dim;
  double jac[9];
  element_jacobian(e, jac);
  if (d == 2) return jac[0] * jac[3] - jac[1] * jac[2];
  return jac[0] * (jac[4] * jac[8] - jac[5] * jac[7]) - jac[1] * (jac[3] * jac[8] - jac[5] * jac[6]) +
         jac[2] * (jac[3] * jac[7] - jac[4] * jac[6]);
}

void NodalDeformation::value_at(int e, const double* barycentric, double* y) const {
  const int d = mesh->dim;
  const int* el = mesh->element(e);
  for (int i = 0; i < d; ++i) y[i] = 0.0;
  for (int k = 0; k <= d; ++k) {
    const double* yk = node_position(el[k]);
    for (int i = 0; i < d; ++i) y[i] += barycentric[k] * yk[i];
  }
}

NodalDeformation interpolate_chart(const Mesh& mesh, const DeformationChart& chart) {
  NodalDeformation def;
  def.mesh = &mesh;
  def.node_positions.resize(static_cast<std::size_t>(mesh.n_nodes()) * mesh.dim);
  for (int a = 0; a < mesh.n_nodes(); ++a)
    chart.value(mesh.node(a), def.node_positions.data() + static_cast<std::size_t>(a) * mesh.dim);
  return def;
}

TensorValue strain(const MetricValue& g_phi, const MetricValue& g0) {
  if (g_phi.dim() != g0.dim()) fail(ErrorKind::Dimension, "strain: dim mismatch");
  const int d = g0.dim();
  TensorValue e(d, {Slot::Cov, Slot::Cov});
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      const double v = 0.5 * (g_phi.g(i, j) - g0.g(i, j));
      e.at({i, j}) = v;
      e.at({j, i}) = v;
    }
  return e;
}

TensorValue linearized_strain(const TensorValue& xi, const double* dxi, const MetricValue& g0,
                              const TensorValue& gamma0) {
  const int d = g0.dim();
  TensorValue grad = covariant_derivative_vector(xi, dxi, gamma0); // (i,k): nabla_i xi^k
  TensorValue e(d, {Slot::Cov, Slot::Cov});
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      double s = 0.0;
      for (int k = 0; k < d; ++k) s += g0.g(j, k) * grad.at({i, k}) + g0.g(i, k) * grad.at({j, k});
      e.at({i, j}) = 0.5 * s;
      e.at({j, i}) = 0.5 * s;
    }
  return e;
}

TensorValue metric_first_variation(const MetricModel& model, const double* y, const double* jac,
                                   const double* w, const double* dw) {
  const int d = model.dim();
  MetricValue ghat = model.evaluate(y);
  TensorValue dg(d, {Slot::Cov, Slot::Cov});
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      double s = 0.0;
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          s += dw[i * d + a] * jac[b * d + j] * ghat.g(a, b);
          s += jac[a * d + i] * dw[j * d + b] * ghat.g(a, b);
          for (int c = 0; c < d; ++c) s += jac[a * d + i] * jac[b * d + j] * ghat.dg(c, a, b) * w[c];
        }
      dg.at({i, j}) = s;
      dg.at({j, i}) = s;
    }
  return dg;
}

NodalDeformation displacement_to_deformation(const DeformationChart& phi0, const MetricModel& model,
                                             const DisplacementField& xi) {
  const Mesh& mesh = *xi.mesh;
  const int d = mesh.dim;
  NodalDeformation def;
  def.mesh = &mesh;
  def.node_positions.resize(static_cast<std::size_t>(mesh.n_nodes()) * d);

  for (int a = 0; a < mesh.n_nodes(); ++a) {
    const double* x = mesh.node(a);
    double y0[3], jac[9], v[3];
    phi0.value(x, y0);
    phi0.jacobian(x, jac);
    for (int al = 0; al < d; ++al) {
      double s = 0.0;
      for (int i = 0; i < d; ++i) s += jac[al * d + i] * xi.node_value(a)[i];
      v[al] = s;
    }
    const double norm = ambient_norm(model, y0, v);
    const double bound = model.injectivity_bound(y0);
    if (!(norm < bound))
      fail(ErrorKind::DisplacementTooLarge,
           "displacement too large at node " + std::to_string(a) + ": |Dphi0 xi| = " +
               std::to_string(norm) + " exceeds the admissibility bound " + std::to_string(bound));
    geodesic_exp(model, y0, v, def.node_positions.data() + static_cast<std::size_t>(a) * d);
  }
  return def;
}

} // namespace relast
