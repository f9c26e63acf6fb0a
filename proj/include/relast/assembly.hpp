#ifndef RELAST_ASSEMBLY_HPP
#define RELAST_ASSEMBLY_HPP

#include <array>
#include <functional>
#include <vector>

#include "relast/constitutive.hpp"
#include "relast/forces.hpp"
#include "relast/kinematics.hpp"
#include "relast/mesh.hpp"
#include "relast/quadrature.hpp"
#include "relast/sparse.hpp"

namespace relast {

// Node*component -> free equation index, -1 on the constrained (gamma1) set.
struct DofMap {
  std::vector<int> index;
  int n_free = 0;
  int dim = 2;

  static DofMap build(const Mesh& mesh, bool eliminate_gamma1 = true);

  int operator()(int node, int comp) const {
    return index[static_cast<std::size_t>(node) * dim + comp];
  }

  std::vector<double> restrict_nodal(const std::vector<double>& nodal) const;
  std::vector<double> expand_free(const std::vector<double>& free_values) const;
};

// P1 simplex data in chart coordinates: constant shape gradients and volume.
struct P1Element {
  std::array<int, 4> nodes{};
  double grads[4][3] = {};
  double volume = 0.0;
};
P1Element p1_element(const Mesh& mesh, int e);

// Reference deformation data shared by assembly and residual evaluation:
// nodal positions of phi0, exact nodal Jacobians, and element Jacobians of
// the interpolated reference map.
struct ReferenceCache {
  const Mesh* mesh = nullptr;
  NodalDeformation phi0_h;
  std::vector<double> node_jacobians; // n_nodes * dim * dim

  static ReferenceCache build(const Mesh& mesh, const DeformationChart& phi0);
  const double* node_jacobian(int a) const {
    return node_jacobians.data() + static_cast<std::size_t>(a) * mesh->dim * mesh->dim;
  }
};

struct LinearSystem {
  CsrMatrix stiffness;
  std::vector<double> rhs;
  DofMap dof_map;
};

struct AssemblyOptions {
  bool eliminate_gamma1 = true;
  bool include_live_terms = true;
};

// Galerkin system of the linearized problem: stiffness a(.,.) with live force
// terms moved to the left, right-hand side from the dead body load and the
// gamma2 tractions; degree-2 quadrature throughout.
LinearSystem assemble(const Mesh& mesh, const MaterialModel& mat, const MetricModel& model,
                      const DeformationChart& phi0, const ForceModel& fm,
                      const AssemblyOptions& options = {});

DisplacementField solve_linear(const Mesh& mesh, const LinearSystem& sys, double tol, int maxiter,
                               int* iterations = nullptr);

// Gram matrices over the free DOFs, used by norms and spectral estimates:
//   mass      int g0_ij xi^i eta^j
//   gradient  int g0_ij g0^{kl} nabla_k xi^i nabla_l eta^j
//   strain    int g0^{ik} g0^{jl} e_ij[xi] e_kl[eta]
enum class GramKind { Mass, Gradient, Strain };
CsrMatrix assemble_gram(const Mesh& mesh, const MetricModel& model, const DeformationChart& phi0,
                        GramKind kind, const DofMap& dofs);

// Closed-form vector field on the chart with its coordinate gradient
// dxi(i,j) = d_i xi^j.
struct AnalyticField {
  std::function<void(const double*, double*)> value;
  std::function<void(const double*, double*)> gradient;
};

struct ErrorNorms {
  double l2 = 0.0;
  double h1 = 0.0;
};

// Degree-5 quadrature of the L2/H1 errors against a closed-form field.
ErrorNorms solution_error(const Mesh& mesh, const MetricModel& model, const DeformationChart& phi0,
                          const DisplacementField& xi_h, const AnalyticField& exact);

// Two-point tensor field ttilde^i_a with analytic coordinate derivatives
// dt(m,i,a) = d_m ttilde^i_a.
struct AnalyticTwoPointField {
  std::function<void(const double*, double*)> value;    // dim*dim, (i,a)
  std::function<void(const double*, double*)> gradient; // dim*dim*dim, (m,i,a)
};

// Quadrature check of the integration-by-parts identity
//   int T : grad xi = -int (div T) . xi + boundary normal-trace term,
// all three integrals with degree-5 volume and facet rules; returns
// |lhs - rhs| / max over the three term magnitudes.
double verify_integration_by_parts(const MetricModel& model, const DeformationChart& phi,
                                   const AnalyticTwoPointField& ttilde, const AnalyticField& xi_tilde,
                                   const Mesh& mesh);

} // namespace relast

#endif
