#include "relast/quadrature.hpp"

#include <cmath>

namespace relast {

namespace {

SimplexRule make_tri_degree2() {
  SimplexRule r;
  r.dim = 2;
  const double a = 2.0 / 3.0, b = 1.0 / 6.0;
  r.barycentric = {a, b, b, b, a, b, b, b, a};
  r.weights = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  return r;
}

SimplexRule make_tet_degree2() {
  SimplexRule r;
  r.dim = 3;
  const double a = (5.0 + 3.0 * std::sqrt(5.0)) / 20.0;
  const double b = (5.0 - std::sqrt(5.0)) / 20.0;
  for (int q = 0; q < 4; ++q) {
    for (int k = 0; k < 4; ++k) r.barycentric.push_back(k == q ? a : b);
    r.weights.push_back(0.25);
  }
  return r;
}

SimplexRule make_tri_degree5() {
  // Radon's 7-point rule, closed-form coefficients
  SimplexRule r;
  r.dim = 2;
  const double s15 = std::sqrt(15.0);
  const double a1 = (6.0 + s15) / 21.0, b1 = 1.0 - 2.0 * a1;
  const double a2 = (6.0 - s15) / 21.0, b2 = 1.0 - 2.0 * a2;
  const double w1 = (155.0 + s15) / 1200.0;
  const double w2 = (155.0 - s15) / 1200.0;
  const double third = 1.0 / 3.0;
  r.barycentric = {third, third, third,
                   a1, a1, b1,  a1, b1, a1,  b1, a1, a1,
                   a2, a2, b2,  a2, b2, a2,  b2, a2, a2};
  r.weights = {9.0 / 40.0, w1, w1, w1, w2, w2, w2};
  return r;
}

SimplexRule make_tet_degree5() {
  // Collapsed tensor-product Gauss rule on the reference tetrahedron via
  //   x = u, y = v(1-u), z = w(1-u)(1-v), Jacobian (1-u)^2 (1-v).
  // With 4 Gauss points per axis the rule integrates polynomials of total
  // degree <= 5 exactly (the collapsed integrand stays within degree 7 per
  // axis).
  SimplexRule r;
  r.dim = 3;
  const IntervalRule& g = gauss_rule_unit(4);
  for (int iu = 0; iu < 4; ++iu)
    for (int iv = 0; iv < 4; ++iv)
      for (int iw = 0; iw < 4; ++iw) {
        const double u = g.points[static_cast<std::size_t>(iu)];
        const double v = g.points[static_cast<std::size_t>(iv)];
        const double w = g.points[static_cast<std::size_t>(iw)];
        const double x = u;
        const double y = v * (1.0 - u);
        const double z = w * (1.0 - u) * (1.0 - v);
        const double jac = (1.0 - u) * (1.0 - u) * (1.0 - v);
        r.barycentric.push_back(1.0 - x - y - z);
        r.barycentric.push_back(x);
        r.barycentric.push_back(y);
        r.barycentric.push_back(z);
        // the collapsed weights sum to the reference volume 1/6; scale by 6
        // so the stored weights sum to 1
        r.weights.push_back(6.0 * jac *
                            g.weights[static_cast<std::size_t>(iu)] *
                            g.weights[static_cast<std::size_t>(iv)] *
                            g.weights[static_cast<std::size_t>(iw)]);
      }
  return r;
}

} // namespace

const SimplexRule& simplex_rule_degree2(int dim) {
  static const SimplexRule tri = make_tri_degree2();
  static const SimplexRule tet = make_tet_degree2();
  if (dim == 2) return tri;
  if (dim == 3) return tet;
  fail(ErrorKind::Dimension, "simplex rule: dim must be 2 or 3");
}

const SimplexRule& simplex_rule_degree5(int dim) {
  static const SimplexRule tri = make_tri_degree5();
  static const SimplexRule tet = make_tet_degree5();
  if (dim == 2) return tri;
  if (dim == 3) return tet;
  fail(ErrorKind::Dimension, "simplex rule: dim must be 2 or 3");
}

const IntervalRule& gauss_rule_unit(int n) {
  static const IntervalRule rules[4] = {
      {{0.5}, {1.0}},
      {{0.5 - 0.5 / std::sqrt(3.0), 0.5 + 0.5 / std::sqrt(3.0)}, {0.5, 0.5}},
      {{0.5 - 0.5 * std::sqrt(3.0 / 5.0), 0.5, 0.5 + 0.5 * std::sqrt(3.0 / 5.0)},
       {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0}},
      {{0.5 - 0.5 * std::sqrt((3.0 + 2.0 * std::sqrt(6.0 / 5.0)) / 7.0),
        0.5 - 0.5 * std::sqrt((3.0 - 2.0 * std::sqrt(6.0 / 5.0)) / 7.0),
        0.5 + 0.5 * std::sqrt((3.0 - 2.0 * std::sqrt(6.0 / 5.0)) / 7.0),
        0.5 + 0.5 * std::sqrt((3.0 + 2.0 * std::sqrt(6.0 / 5.0)) / 7.0)},
       {(18.0 - std::sqrt(30.0)) / 72.0, (18.0 + std::sqrt(30.0)) / 72.0,
        (18.0 + std::sqrt(30.0)) / 72.0, (18.0 - std::sqrt(30.0)) / 72.0}}};
  if (n < 1 || n > 4) fail(ErrorKind::Dimension, "gauss rule: n must be 1..4");
  return rules[n - 1];
}

} // namespace relast
