#ifndef RELAST_FORCES_HPP
#define RELAST_FORCES_HPP

#include <array>

#include "relast/tensor.hpp"

namespace relast {

// Dead body load profiles over the M-chart; components per unit reference
// volume form. The menu is fixed:
//   constant  f_i(x) = v_i
//   sine2d    f_i(x) = A sin(pi x1) sin(pi x2)
//   poly2d    f_i(x) = A x1 (1 - x1) x2 (1 - x2)
enum class ForceProfile { None, Constant, Sine2d, Poly2d };

struct ForceModel {
  ForceProfile profile = ForceProfile::None;
  std::array<double, 3> dead_vector{0.0, 0.0, 0.0};
  double amplitude = 1.0;

  bool has_live_f1 = false;
  TensorValue live_f1; // (0,2), contracted as (f1 . xi)_i = f1_ik xi^k
  bool has_live_f2 = false;
  TensorValue live_f2; // (1,2), contracted as (f2 : grad xi)_j = f2^i_jk nabla_i xi^k

  bool has_traction = false;
  std::array<double, 3> traction{0.0, 0.0, 0.0}; // covector per unit reference facet measure

  // f0_i(x), the dead part
  void dead_body(const double* x, int dim, double* out) const;

  // In nonlinear runs the same constant vector acts as the ambient dead
  // covector fhat (components in the N-chart); only the constant profile is
  // meaningful there.
  const std::array<double, 3>& dead_ambient() const { return dead_vector; }
};

// f_aff_i = f0_i(x) + f1_ik xi^k + f2^m_ik nabla_m xi^k; dxi_cov(i,k) must be
// the covariant derivative nabla_i xi^k.
TensorValue body_force_affine(const ForceModel& fm, const TensorValue& xi, const double* dxi_cov,
                              const double* x);

// Pullback of the constant ambient dead covector through the deformation
// Jacobian: f_i = J^a_i fhat_a.
TensorValue dead_force_pullback(const ForceModel& fm, const double* jac, int dim);

struct NormalTraceResult {
  TensorValue traction; // covector, slot layout follows T's second slot
  double measure;       // facet measure against the declared carrier form
};

// Normal trace of a mixed tensor on a boundary facet. The unit outward
// normal is taken with respect to `g`; the carrier density is the scalar
// rho with omega = rho dx^1 ^ ... ^ dx^n. The traction changes with g but the
// product traction x measure does not.
//   facet_nodes:  dim points of dim coordinates each, row-major
//   inward_point: any point strictly inside the adjacent element
NormalTraceResult normal_trace(const TensorValue& T, const MetricValue& g, const double* facet_nodes,
                               const double* inward_point, double carrier_density);

} // namespace relast

#endif
