#include "relast/geometry.hpp"

#include <cmath>
#include <cstring>

namespace relast {

DeformationChart DeformationChart::identity(int dim) {
  DeformationChart c;
  c.kind_ = Kind::Identity;
  c.dim_ = dim;
  return c;
}

DeformationChart DeformationChart::linear(int dim, const std::vector<double>& matrix) {
  if (static_cast<int>(matrix.size()) != dim * dim)
    fail(ErrorKind::Dimension, "linear chart needs dim*dim matrix entries");
  DeformationChart c;
  c.kind_ = Kind::Linear;
  c.dim_ = dim;
  c.matrix_ = matrix;
  if (!(c.jacobian_det(nullptr) > 0.0))
    fail(ErrorKind::ImmersionFailure, "linear chart matrix must have positive determinant");
  return c;
}

DeformationChart DeformationChart::polar_embedding() {
  DeformationChart c;
  c.kind_ = Kind::PolarEmbedding;
  c.dim_ = 2;
  return c;
}

void DeformationChart::value(const double* x, double* y) const {
  switch (kind_) {
    case Kind::Identity:
      for (int i = 0; i < dim_; ++i) y[i] = x[i];
      return;
    case Kind::Linear:
      for (int a = 0; a < dim_; ++a) {
        double s = 0.0;
        for (int i = 0; i < dim_; ++i) s += matrix_[static_cast<std::size_t>(a * dim_ + i)] * x[i];
        y[a] = s;
      }
      return;
    case Kind::PolarEmbedding:
      y[0] = x[0] * std::cos(x[1]);
      y[1] = x[0] * std::sin(x[1]);
      return;
  }
}

void DeformationChart::jacobian(const double* x, double* j) const {
  switch (kind_) {
    case Kind::Identity:
      std::memset(j, 0, sizeof(double) * static_cast<std::size_t>(dim_ * dim_));
      for (int i = 0; i < dim_; ++i) j[i * dim_ + i] = 1.0;
      return;
    case Kind::Linear:
      std::memcpy(j, matrix_.data(), sizeof(double) * static_cast<std::size_t>(dim_ * dim_));
      return;
    case Kind::PolarEmbedding: {
      const double r = x[0], t = x[1];
      j[0 * 2 + 0] = std::cos(t);
      j[0 * 2 + 1] = -r * std::sin(t);
      j[1 * 2 + 0] = std::sin(t);
      j[1 * 2 + 1] = r * std::cos(t);
      return;
    }
  }
}

void DeformationChart::hessian(const double* x, double* h) const {
  std::memset(h, 0, sizeof(double) * static_cast<std::size_t>(dim_ * dim_ * dim_));
  if (kind_ == Kind::PolarEmbedding) {
    const double r = x[0], t = x[1];
    auto H = [&](int a, int i, int k) -> double& { return h[(a * 2 + i) * 2 + k]; };
    H(0, 0, 1) = -std::sin(t);
    H(0, 1, 0) = -std::sin(t);
    H(0, 1, 1) = -r * std::cos(t);
    H(1, 0, 1) = std::cos(t);
    H(1, 1, 0) = std::cos(t);
    H(1, 1, 1) = -r * std::sin(t);
  }
}

double DeformationChart::jacobian_det(const double* x) const {
  double j[9];
  double probe[3] = {1.0, 0.5, 0.5}; // linear charts ignore the point
  jacobian(x ? x : probe, j);
  if (dim_ == 2) return j[0] * j[3] - j[1] * j[2];
  return j[0] * (j[4] * j[8] - j[5] * j[7]) - j[1] * (j[3] * j[8] - j[5] * j[6]) +
         j[2] * (j[3] * j[7] - j[4] * j[6]);
}

MetricValue pullback_from_jacobian(const MetricModel& model, const double* y, const double* jac, int dim) {
  MetricValue ghat = model.evaluate(y);
  double det = 0.0;
  if (dim == 2)
    det = jac[0] * jac[3] - jac[1] * jac[2];
  else
    det = jac[0] * (jac[4] * jac[8] - jac[5] * jac[7]) - jac[1] * (jac[3] * jac[8] - jac[5] * jac[6]) +
          jac[2] * (jac[3] * jac[7] - jac[4] * jac[6]);
  if (det == 0.0) fail(ErrorKind::ImmersionFailure, "pullback: singular Jacobian");

  double g[9] = {0};
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      double s = 0.0;
      for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) s += jac[a * dim + i] * jac[b * dim + j] * ghat.g(a, b);
      g[i * dim + j] = s;
      g[j * dim + i] = s;
    }
  return MetricValue(dim, g);
}

MetricValue pullback_metric(const MetricModel& model, const DeformationChart& chart, const double* x) {
  const int d = chart.dim();
  if (d != model.dim()) fail(ErrorKind::Dimension, "pullback: chart/model dim mismatch");
  double y[3], jac[9], hess[27];
  chart.value(x, y);
  chart.jacobian(x, jac);
  chart.hessian(x, hess);

  MetricValue base = pullback_from_jacobian(model, y, jac, d);
  MetricValue ghat = model.evaluate(y);

  // chain rule: d_m g_ij = H^a_mi J^b_j ghat_ab + J^a_i H^b_mj ghat_ab
  //                        + J^a_i J^b_j d_c ghat_ab J^c_m
  double dg[27] = {0};
  auto H = [&](int a, int i, int k) { return hess[(a * d + i) * d + k]; };
  for (int m = 0; m < d; ++m)
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) {
        double s = 0.0;
        for (int a = 0; a < d; ++a)
          for (int b = 0; b < d; ++b) {
            s += H(a, m, i) * jac[b * d + j] * ghat.g(a, b);
            s += jac[a * d + i] * H(b, m, j) * ghat.g(a, b);
            for (int c = 0; c < d; ++c)
              s += jac[a * d + i] * jac[b * d + j] * ghat.dg(c, a, b) * jac[c * d + m];
          }
        dg[(m * d + i) * d + j] = s;
        dg[(m * d + j) * d + i] = s;
      }

  double gflat[9];
  for (int i = 0; i < d * d; ++i) gflat[i] = base.g(i / d, i % d);
  MetricValue out(d, gflat);
  out.set_dg(dg);
  return out;
}

namespace {

// ydot' = -Gamma^a_bc(y) ydot^b ydot^c
void geodesic_rhs(const MetricModel& model, const double* state, double* deriv, int d) {
  const double* y = state;
  const double* v = state + d;
  MetricValue m = model.evaluate(y);
  TensorValue gamma = christoffels(m);
  for (int i = 0; i < d; ++i) deriv[i] = v[i];
  for (int a = 0; a < d; ++a) {
    double s = 0.0;
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) s += gamma.at({a, b, c}) * v[b] * v[c];
    deriv[d + a] = -s;
  }
}

} // namespace

double ambient_norm(const MetricModel& model, const double* y, const double* v) {
  MetricValue m = model.evaluate(y);
  double s = 0.0;
  for (int i = 0; i < model.dim(); ++i)
    for (int j = 0; j < model.dim(); ++j) s += m.g(i, j) * v[i] * v[j];
  return std::sqrt(s);
}

GeodesicTrajectory geodesic_exp_trajectory(const MetricModel& model, const double* y0, const double* v) {
  const int d = model.dim();
  if (!model.admissible(y0)) fail(ErrorKind::ChartExit, "geodesic start point outside admissible region");

  GeodesicTrajectory traj;
  const double speed = ambient_norm(model, y0, v);
  int n = std::max(16, static_cast<int>(std::ceil(64.0 * speed)));
  traj.n_steps = n;
  traj.states.resize(static_cast<std::size_t>(n + 1) * 2 * d);

  double state[6];
  for (int i = 0; i < d; ++i) {
    state[i] = y0[i];
    state[d + i] = v[i];
  }
  std::memcpy(traj.states.data(), state, sizeof(double) * static_cast<std::size_t>(2 * d));

  const double h = 1.0 / n;
  double k1[6], k2[6], k3[6], k4[6], tmp[6];
  for (int step = 0; step < n; ++step) {
    geodesic_rhs(model, state, k1, d);
    for (int i = 0; i < 2 * d; ++i) tmp[i] = state[i] + 0.5 * h * k1[i];
    geodesic_rhs(model, tmp, k2, d);
    for (int i = 0; i < 2 * d; ++i) tmp[i] = state[i] + 0.5 * h * k2[i];
    geodesic_rhs(model, tmp, k3, d);
    for (int i = 0; i < 2 * d; ++i) tmp[i] = state[i] + h * k3[i];
    geodesic_rhs(model, tmp, k4, d);
    for (int i = 0; i < 2 * d; ++i)
      state[i] += h / 6.0 * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);

    for (int i = 0; i < 2 * d; ++i)
      if (!std::isfinite(state[i])) fail(ErrorKind::Divergence, "geodesic integration diverged");
    if (!model.admissible(state))
      fail(ErrorKind::ChartExit, "geodesic left the admissible chart region");
    std::memcpy(traj.states.data() + static_cast<std::size_t>(step + 1) * 2 * d, state,
                sizeof(double) * static_cast<std::size_t>(2 * d));
  }
  return traj;
}

void geodesic_exp(const MetricModel& model, const double* y0, const double* v, double* out) {
  const int d = model.dim();
  if (model.flat_chart()) {
    // straight chart lines are the exact geodesics
    for (int i = 0; i < d; ++i) out[i] = y0[i] + v[i];
    return;
  }
  GeodesicTrajectory traj = geodesic_exp_trajectory(model, y0, v);
  const double* last = traj.states.data() + static_cast<std::size_t>(traj.n_steps) * 2 * d;
  for (int i = 0; i < d; ++i) out[i] = last[i];
}

TensorValue ricci(const MetricModel& model, const double* y) {
  const int d = model.dim();
  MetricValue m = model.evaluate(y, /*with_second=*/true);
  if (!m.has_d2g()) fail(ErrorKind::Capability, "ricci: second metric derivatives unavailable");

  // Gamma and its coordinate derivative from dg, d2g:
  //   dGamma^k_ij / dx^m = 1/2 dginv^{kl}_m (...) + 1/2 ginv^{kl} d_m(...)
  //   dginv^{kl}_m = -ginv^{ka} dg_m,ab ginv^{bl}
  TensorValue gamma = christoffels(m);
  double dgamma[81]; // (m,k,i,j)
  auto DGAMMA = [&](int mm, int k, int i, int j) -> double& {
    return dgamma[((mm * d + k) * d + i) * d + j];
  };
  double dginv[27];
  for (int mm = 0; mm < d; ++mm)
    for (int k = 0; k < d; ++k)
      for (int l = 0; l < d; ++l) {
        double s = 0.0;
        for (int a = 0; a < d; ++a)
          for (int b = 0; b < d; ++b) s -= m.ginv(k, a) * m.dg(mm, a, b) * m.ginv(b, l);
        dginv[(mm * d + k) * d + l] = s;
      }
  for (int mm = 0; mm < d; ++mm)
    for (int k = 0; k < d; ++k)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          double s = 0.0;
          for (int l = 0; l < d; ++l) {
            const double bracket = m.dg(i, j, l) + m.dg(j, i, l) - m.dg(l, i, j);
            const double dbracket = m.d2g(mm, i, j, l) + m.d2g(mm, j, i, l) - m.d2g(mm, l, i, j);
            s += 0.5 * dginv[(mm * d + k) * d + l] * bracket + 0.5 * m.ginv(k, l) * dbracket;
          }
          DGAMMA(mm, k, i, j) = s;
        }

  // R_ij = d_k Gamma^k_ij - d_i Gamma^k_kj + Gamma^k_kl Gamma^l_ij - Gamma^k_il Gamma^l_kj
  TensorValue ric(d, {Slot::Cov, Slot::Cov});
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      double s = 0.0;
      for (int k = 0; k < d; ++k) {
        s += DGAMMA(k, k, i, j) - DGAMMA(i, k, k, j);
        for (int l = 0; l < d; ++l)
          s += gamma.at({k, k, l}) * gamma.at({l, i, j}) - gamma.at({k, i, l}) * gamma.at({l, k, j});
      }
      ric.at({i, j}) = s;
      ric.at({j, i}) = s;
    }
  return ric;
}

double density_ratio(const MetricModel& model, const DeformationChart& phi0,
                     const DeformationChart& phi, const double* x) {
  const int d = model.dim();
  double y0[3], y[3], j0[9], j[9];
  phi0.value(x, y0);
  phi.value(x, y);
  phi0.jacobian(x, j0);
  phi.jacobian(x, j);

  auto det_of = [&](const double* a) {
    if (d == 2) return a[0] * a[3] - a[1] * a[2];
    return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
           a[2] * (a[3] * a[7] - a[4] * a[6]);
  };
  const double det0 = det_of(j0);
  const double det1 = det_of(j);
  if (det0 == 0.0 || det1 == 0.0) fail(ErrorKind::ImmersionFailure, "density_ratio: singular Jacobian");

  const double s0 = model.evaluate(y0).sqrt_det();
  const double s1 = model.evaluate(y).sqrt_det();
  return (det0 * s0) / (det1 * s1);
}

} // namespace relast
