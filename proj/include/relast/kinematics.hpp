#ifndef RELAST_KINEMATICS_HPP
#define RELAST_KINEMATICS_HPP

#include <vector>

#include "relast/geometry.hpp"
#include "relast/mesh.hpp"

namespace relast {

// Nodal displacement field on a mesh, contravariant components in the M-chart.
// Entries at gamma1-tagged nodes are held at zero.
struct DisplacementField {
  const Mesh* mesh = nullptr;
  std::vector<double> values; // n_nodes * dim

  static DisplacementField zero(const Mesh& m);

  int dim() const { return mesh->dim; }
  double* node_value(int a) { return values.data() + static_cast<std::size_t>(a) * mesh->dim; }
  const double* node_value(int a) const { return values.data() + static_cast<std::size_t>(a) * mesh->dim; }

  void enforce_gamma1();
};

// Deformation known through nodal N-chart coordinates, interpolated
// piecewise-linearly between nodes.
struct NodalDeformation {
  const Mesh* mesh = nullptr;
  std::vector<double> node_positions; // n_nodes * dim, N-chart coordinates

  const double* node_position(int a) const {
    return node_positions.data() + static_cast<std::size_t>(a) * mesh->dim;
  }
  // element-constant Jacobian dphi^a/dx^i, row-major
  void element_jacobian(int e, double* jac) const;
  double element_jacobian_det(int e) const;
  void value_at(int e, const double* barycentric, double* y) const;
};

// Nodal interpolant of a closed-form chart.
NodalDeformation interpolate_chart(const Mesh& mesh, const DeformationChart& chart);

// E = (g_phi - g0) / 2, symmetric.
TensorValue strain(const MetricValue& g_phi, const MetricValue& g0);

// e_ij = (g0_jk nabla_i xi^k + g0_ik nabla_j xi^k) / 2 with nabla from gamma0.
TensorValue linearized_strain(const TensorValue& xi, const double* dxi, const MetricValue& g0,
                              const TensorValue& gamma0);

// First variation of the pulled-back metric at a chart point:
//   dg_ij = dw^a_i J^b_j ghat_ab + J^a_i dw^b_j ghat_ab + J^a_i J^b_j d_c ghat_ab w^c
// evaluated at y with J = Dphi(x); w, dw are the variation value and its
// coordinate derivative dw(i,a) = d_i w^a.
TensorValue metric_first_variation(const MetricModel& model, const double* y, const double* jac,
                                   const double* w, const double* dw);

// Nodal deformation phi with phi(x_a) = exp_{phi0(x_a)}(Dphi0(x_a) xi(x_a)).
// Each node must satisfy |Dphi0 xi|_ghat < injectivity_bound(phi0(x_a)).
NodalDeformation displacement_to_deformation(const DeformationChart& phi0, const MetricModel& model,
                                             const DisplacementField& xi);

} // namespace relast

#endif
