#ifndef RELAST_METRIC_MODELS_HPP
#define RELAST_METRIC_MODELS_HPP

#include <string>

#include "relast/tensor.hpp"

namespace relast {

enum class MetricKind { Euclidean, PolarFlat, Sphere, HyperbolicHalfPlane, PerturbedFlat };

// Analytic ambient metric on a single chart of N, with closed-form first and
// second coordinate derivatives. Admissible chart regions:
//   euclidean            all of R^d
//   polar_flat           (r, theta), r > 0, g = diag(1, r^2)           [dim 2]
//   sphere(R)            (theta, phi), 0 < theta < pi,
//                        g = diag(R^2, R^2 sin^2 theta)                [dim 2]
//   hyperbolic_half_plane  last coordinate > 0, g = delta / (y_d)^2
//   perturbed_flat(a,k)  g_ab = delta_ab (1 + a sin(k y1) sin(k y2)), |a| < 1
class MetricModel {
public:
  MetricModel() = default;

  static MetricModel euclidean(int dim);
  static MetricModel polar_flat();
  static MetricModel sphere(double radius);
  static MetricModel hyperbolic_half_plane(int dim);
  static MetricModel perturbed_flat(int dim, double amplitude, double wavenumber);

  MetricKind kind() const { return kind_; }
  int dim() const { return dim_; }
  double radius() const { return radius_; }
  double amplitude() const { return amplitude_; }
  double wavenumber() const { return wavenumber_; }
  std::string name() const;

  bool admissible(const double* y) const;

  // Metric with first derivatives; with_second adds the second derivatives.
  MetricValue evaluate(const double* y, bool with_second = false) const;

  // Geodesic ball radius within which the exponential map at y is trusted:
  // pi*R on the sphere, a conservative constant for the perturbed metric,
  // distance to the chart edge for the incomplete polar chart, infinity
  // otherwise.
  double injectivity_bound(const double* y) const;

  // True when straight chart lines are the exact geodesics.
  bool flat_chart() const { return kind_ == MetricKind::Euclidean; }

private:
  MetricKind kind_ = MetricKind::Euclidean;
  int dim_ = 2;
  double radius_ = 1.0;
  double amplitude_ = 0.0;
  double wavenumber_ = 1.0;
};

} // namespace relast

#endif
