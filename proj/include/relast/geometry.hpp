#ifndef RELAST_GEOMETRY_HPP
#define RELAST_GEOMETRY_HPP

#include <memory>
#include <vector>

#include "relast/metric_models.hpp"
#include "relast/tensor.hpp"

namespace relast {

// Closed-form chart map from M-coordinates to N-coordinates with analytic
// first and second derivatives. Used for reference deformations.
class DeformationChart {
public:
  enum class Kind { Identity, Linear, PolarEmbedding };

  static DeformationChart identity(int dim);
  // matrix row-major dim*dim, det > 0
  static DeformationChart linear(int dim, const std::vector<double>& matrix);
  // (r, theta) -> (r cos theta, r sin theta), dim 2, r > 0
  static DeformationChart polar_embedding();

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }

  void value(const double* x, double* y) const;
  // J(a,i) = d phi^a / d x^i, row-major dim*dim
  void jacobian(const double* x, double* j) const;
  // H(a,i,k) = d^2 phi^a / d x^i d x^k, dim^3, (a,i,k) row-major
  void hessian(const double* x, double* h) const;

  double jacobian_det(const double* x) const;

private:
  Kind kind_ = Kind::Identity;
  int dim_ = 2;
  std::vector<double> matrix_;
};

// g[phi]_ij = J^a_i J^b_j ghat_ab(y) from a point value and Jacobian.
MetricValue pullback_from_jacobian(const MetricModel& model, const double* y, const double* jac, int dim);

// Pullback metric at x under a closed-form chart; first derivatives are
// populated by the chain rule (needs the chart Hessian).
MetricValue pullback_metric(const MetricModel& model, const DeformationChart& chart, const double* x);

// End point of the unit-time geodesic from y0 with initial velocity v,
// integrated with classical RK4 and n_steps = max(16, ceil(64 |v|_ghat)).
// Euclidean charts use the exact straight-line geodesic.
void geodesic_exp(const MetricModel& model, const double* y0, const double* v, double* out);

// As geodesic_exp but records the state after every step; states[k] holds
// (y, ydot) after k steps, k = 0..n_steps. Returns n_steps.
struct GeodesicTrajectory {
  int n_steps = 0;
  std::vector<double> states; // (n_steps+1) * 2*dim, [y | ydot] per row
};
GeodesicTrajectory geodesic_exp_trajectory(const MetricModel& model, const double* y0, const double* v);

// Ricci tensor R_ij at y, symmetric.
TensorValue ricci(const MetricModel& model, const double* y);

// rho = [det(Dphi0) sqrt(det ghat(phi0(x)))] / [det(Dphi) sqrt(det ghat(phi(x)))]
double density_ratio(const MetricModel& model, const DeformationChart& phi0,
                     const DeformationChart& phi, const double* x);

// |v|_ghat at y
double ambient_norm(const MetricModel& model, const double* y, const double* v);

} // namespace relast

#endif
