#include "relast/metric_models.hpp"

#include <cmath>
#include <limits>

namespace relast {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

MetricModel MetricModel::euclidean(int dim) {
  MetricModel m;
  m.kind_ = MetricKind::Euclidean;
  m.dim_ = dim;
  return m;
}

MetricModel MetricModel::polar_flat() {
  MetricModel m;
  m.kind_ = MetricKind::PolarFlat;
  m.dim_ = 2;
  return m;
}

MetricModel MetricModel::sphere(double radius) {
  if (!(radius > 0.0)) fail(ErrorKind::Dimension, "sphere radius must be positive");
  MetricModel m;
  m.kind_ = MetricKind::Sphere;
  m.dim_ = 2;
  m.radius_ = radius;
  return m;
}

MetricModel MetricModel::hyperbolic_half_plane(int dim) {
  MetricModel m;
  m.kind_ = MetricKind::HyperbolicHalfPlane;
  m.dim_ = dim;
  return m;
}

MetricModel MetricModel::perturbed_flat(int dim, double amplitude, double wavenumber) {
  if (!(std::abs(amplitude) < 1.0))
    fail(ErrorKind::MetricDegenerate, "perturbed_flat requires |amplitude| < 1");
  MetricModel m;
  m.kind_ = MetricKind::PerturbedFlat;
  m.dim_ = dim;
  m.amplitude_ = amplitude;
  m.wavenumber_ = wavenumber;
  return m;
}

std::string MetricModel::name() const {
  switch (kind_) {
    case MetricKind::Euclidean: return "euclidean";
    case MetricKind::PolarFlat: return "polar_flat";
    case MetricKind::Sphere: return "sphere";
    case MetricKind::HyperbolicHalfPlane: return "hyperbolic_half_plane";
    case MetricKind::PerturbedFlat: return "perturbed_flat";
  }
  return "?";
}

bool MetricModel::admissible(const double* y) const {
  for (int i = 0; i < dim_; ++i)
    if (!std::isfinite(y[i])) return false;
  switch (kind_) {
    case MetricKind::Euclidean:
    case MetricKind::PerturbedFlat:
      return true;
    case MetricKind::PolarFlat:
      return y[0] > 0.0;
    case MetricKind::Sphere:
      return y[0] > 0.0 && y[0] < M_PI;
    case MetricKind::HyperbolicHalfPlane:
      return y[dim_ - 1] > 0.0;
  }
  return false;
}

MetricValue MetricModel::evaluate(const double* y, bool with_second) const {
  if (!admissible(y)) fail(ErrorKind::ChartExit, "metric evaluated outside the admissible chart region");
  const int d = dim_;
  double g[9] = {0};
  double dg[27] = {0};
  double d2g[81] = {0};
  auto G = [&](int i, int j) -> double& { return g[i * d + j]; };
  auto DG = [&](int k, int i, int j) -> double& { return dg[(k * d + i) * d + j]; };
  auto D2G = [&](int l, int k, int i, int j) -> double& { return d2g[((l * d + k) * d + i) * d + j]; };

  switch (kind_) {
    case MetricKind::Euclidean: {
      for (int i = 0; i < d; ++i) G(i, i) = 1.0;
      break;
    }
    case MetricKind::PolarFlat: {
      const double r = y[0];
      G(0, 0) = 1.0;
      G(1, 1) = r * r;
      DG(0, 1, 1) = 2.0 * r;
      D2G(0, 0, 1, 1) = 2.0;
      break;
    }
    case MetricKind::Sphere: {
      const double R2 = radius_ * radius_;
      const double s = std::sin(y[0]);
      const double c = std::cos(y[0]);
      G(0, 0) = R2;
      G(1, 1) = R2 * s * s;
      DG(0, 1, 1) = R2 * 2.0 * s * c;
      D2G(0, 0, 1, 1) = R2 * 2.0 * (c * c - s * s);
      break;
    }
    case MetricKind::HyperbolicHalfPlane: {
      const int n = d - 1; // index of the height coordinate
      const double h = y[n];
      const double f = 1.0 / (h * h);
      const double df = -2.0 / (h * h * h);
      const double d2f = 6.0 / (h * h * h * h);
      for (int i = 0; i < d; ++i) {
        G(i, i) = f;
        DG(n, i, i) = df;
        D2G(n, n, i, i) = d2f;
      }
      break;
    }
    case MetricKind::PerturbedFlat: {
      const double a = amplitude_, k = wavenumber_;
      const double s1 = std::sin(k * y[0]), c1 = std::cos(k * y[0]);
      const double s2 = std::sin(k * y[1]), c2 = std::cos(k * y[1]);
      const double f = 1.0 + a * s1 * s2;
      const double f1 = a * k * c1 * s2;
      const double f2 = a * k * s1 * c2;
      const double f11 = -a * k * k * s1 * s2;
      const double f12 = a * k * k * c1 * c2;
      const double f22 = -a * k * k * s1 * s2;
      for (int i = 0; i < d; ++i) {
        G(i, i) = f;
        DG(0, i, i) = f1;
        DG(1, i, i) = f2;
        D2G(0, 0, i, i) = f11;
        D2G(0, 1, i, i) = f12;
        D2G(1, 0, i, i) = f12;
        D2G(1, 1, i, i) = f22;
      }
      break;
    }
  }

  MetricValue m(d, g);
  m.set_dg(dg);
  if (with_second) m.set_d2g(d2g);
  return m;
}

double MetricModel::injectivity_bound(const double* y) const {
  switch (kind_) {
    case MetricKind::Euclidean:
    case MetricKind::HyperbolicHalfPlane:
      return kInf;
    case MetricKind::PolarFlat:
      return y[0]; // geodesic distance to the r = 0 chart edge
    case MetricKind::Sphere:
      return M_PI * radius_;
    case MetricKind::PerturbedFlat:
      // conservative constant, documented heuristic
      return M_PI / (wavenumber_ * (1.0 + std::abs(amplitude_)));
  }
  return kInf;
}

} // namespace relast
