#ifndef RELAST_QUADRATURE_HPP
#define RELAST_QUADRATURE_HPP

#include <vector>

#include "relast/error.hpp"

namespace relast {

// Quadrature rule on the reference simplex, stored as barycentric coordinates
// (dim+1 per point) and weights normalized to sum to 1; the physical rule
// multiplies each weight by the element volume.
struct SimplexRule {
  int dim = 2;
  std::vector<double> barycentric; // n_points * (dim+1)
  std::vector<double> weights;     // n_points, sums to 1

  int n_points() const { return static_cast<int>(weights.size()); }
  const double* point(int q) const { return barycentric.data() + static_cast<std::size_t>(q) * (dim + 1); }
};

// Degree-2 exact rules: 3-point triangle, 4-point tetrahedron.
const SimplexRule& simplex_rule_degree2(int dim);

// Degree-5 exact rules (used where degree-4 accuracy is required):
// Radon 7-point triangle; collapsed tensor Gauss rule on the tetrahedron.
const SimplexRule& simplex_rule_degree5(int dim);

// Gauss-Legendre rule on [0,1], exact to degree 2n-1, n in {1..4}.
struct IntervalRule {
  std::vector<double> points;
  std::vector<double> weights; // sums to 1
};
const IntervalRule& gauss_rule_unit(int n);

} // namespace relast

#endif
