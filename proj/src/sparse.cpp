#include "relast/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace relast {

CsrMatrix CsrMatrix::from_pairs(int n, std::vector<std::pair<int, int>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  CsrMatrix m;
  m.n_ = n;
  m.row_ptr_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [r, c] : pairs) {
    if (r < 0 || r >= n || c < 0 || c >= n) fail(ErrorKind::Dimension, "sparse pattern index out of range");
    m.row_ptr_[static_cast<std::size_t>(r) + 1] += 1;
  }
  for (int r = 0; r < n; ++r) m.row_ptr_[static_cast<std::size_t>(r) + 1] += m.row_ptr_[static_cast<std::size_t>(r)];
  m.col_idx_.resize(pairs.size());
  std::vector<int> cursor(m.row_ptr_.begin(), m.row_ptr_.end() - 1);
  for (const auto& [r, c] : pairs) m.col_idx_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(r)]++)] = c;
  m.values_.assign(pairs.size(), 0.0);
  return m;
}

double& CsrMatrix::coeff(int row, int col) {
  for (int k = row_ptr_[static_cast<std::size_t>(row)]; k < row_ptr_[static_cast<std::size_t>(row) + 1]; ++k)
    if (col_idx_[static_cast<std::size_t>(k)] == col) return values_[static_cast<std::size_t>(k)];
  fail(ErrorKind::Dimension, "sparse coeff outside the assembled pattern");
}

double CsrMatrix::coeff_or_zero(int row, int col) const {
  for (int k = row_ptr_[static_cast<std::size_t>(row)]; k < row_ptr_[static_cast<std::size_t>(row) + 1]; ++k)
    if (col_idx_[static_cast<std::size_t>(k)] == col) return values_[static_cast<std::size_t>(k)];
  return 0.0;
}

void CsrMatrix::multiply(const double* x, double* y) const {
  for (int r = 0; r < n_; ++r) {
    double s = 0.0;
    for (int k = row_ptr_[static_cast<std::size_t>(r)]; k < row_ptr_[static_cast<std::size_t>(r) + 1]; ++k)
      s += values_[static_cast<std::size_t>(k)] * x[col_idx_[static_cast<std::size_t>(k)]];
    y[r] = s;
  }
}

std::vector<double> CsrMatrix::multiply(const std::vector<double>& x) const {
  std::vector<double> y(static_cast<std::size_t>(n_));
  multiply(x.data(), y.data());
  return y;
}

std::vector<double> CsrMatrix::diagonal() const {
  std::vector<double> d(static_cast<std::size_t>(n_), 0.0);
  for (int r = 0; r < n_; ++r) d[static_cast<std::size_t>(r)] = coeff_or_zero(r, r);
  return d;
}

std::vector<double> CsrMatrix::dense() const {
  std::vector<double> d(static_cast<std::size_t>(n_) * n_, 0.0);
  for (int r = 0; r < n_; ++r)
    for (int k = row_ptr_[static_cast<std::size_t>(r)]; k < row_ptr_[static_cast<std::size_t>(r) + 1]; ++k)
      d[static_cast<std::size_t>(r) * n_ + col_idx_[static_cast<std::size_t>(k)]] = values_[static_cast<std::size_t>(k)];
  return d;
}

double CsrMatrix::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

void CsrMatrix::clear_values() { std::fill(values_.begin(), values_.end(), 0.0); }

CgResult solve_cg(const CsrMatrix& a, const std::vector<double>& b, double tol, int maxiter) {
  const int n = a.rows();
  CgResult res;
  res.x.assign(static_cast<std::size_t>(n), 0.0);

  double bnorm = 0.0;
  for (double v : b) bnorm += v * v;
  bnorm = std::sqrt(bnorm);
  if (bnorm == 0.0) return res; // zero right-hand side: zero solution, zero iterations

  std::vector<double> diag = a.diagonal();
  for (double& d : diag) {
    if (!(d != 0.0)) d = 1.0; // empty rows cannot occur for assembled systems
    d = 1.0 / d;
  }

  std::vector<double> r = b;
  std::vector<double> z(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = diag[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(i)];
  std::vector<double> p = z;
  std::vector<double> ap(static_cast<std::size_t>(n));

  double rz = 0.0;
  for (int i = 0; i < n; ++i) rz += r[static_cast<std::size_t>(i)] * z[static_cast<std::size_t>(i)];

  for (int it = 1; it <= maxiter; ++it) {
    a.multiply(p.data(), ap.data());
    double pap = 0.0;
    for (int i = 0; i < n; ++i) pap += p[static_cast<std::size_t>(i)] * ap[static_cast<std::size_t>(i)];
    if (!(pap > 0.0) || !std::isfinite(pap))
      fail(ErrorKind::NotPositiveDefinite, "cg: operator is not positive definite (p^T A p <= 0)");

    const double alpha = rz / pap;
    for (int i = 0; i < n; ++i) {
      res.x[static_cast<std::size_t>(i)] += alpha * p[static_cast<std::size_t>(i)];
      r[static_cast<std::size_t>(i)] -= alpha * ap[static_cast<std::size_t>(i)];
    }

    double rnorm = 0.0;
    for (double v : r) rnorm += v * v;
    rnorm = std::sqrt(rnorm);
    res.residual_history.push_back(rnorm / bnorm);
    res.iterations = it;
    if (rnorm <= tol * bnorm) return res;

    double rz_new = 0.0;
    for (int i = 0; i < n; ++i) {
      z[static_cast<std::size_t>(i)] = diag[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(i)];
      rz_new += r[static_cast<std::size_t>(i)] * z[static_cast<std::size_t>(i)];
    }
    const double beta = rz_new / rz;
    rz = rz_new;
    for (int i = 0; i < n; ++i)
      p[static_cast<std::size_t>(i)] = z[static_cast<std::size_t>(i)] + beta * p[static_cast<std::size_t>(i)];
  }
  fail(ErrorKind::NonConvergence,
       "cg: no convergence after " + std::to_string(maxiter) + " iterations, last relative residual " +
           std::to_string(res.residual_history.empty() ? 1.0 : res.residual_history.back()));
}

PowerIterationResult smallest_generalized_eigenvalue(const CsrMatrix& a, const CsrMatrix& b,
                                                     double rel_tol, int max_outer, double cg_tol,
                                                     int cg_maxiter) {
  const int n = a.rows();
  PowerIterationResult res;
  res.vector.assign(static_cast<std::size_t>(n), 0.0);
  // deterministic start vector with all generalized modes excited
  for (int i = 0; i < n; ++i)
    res.vector[static_cast<std::size_t>(i)] = 1.0 + 0.37 * std::sin(1.0 + 2.17 * i);

  auto b_norm = [&](const std::vector<double>& x) {
    std::vector<double> bx = b.multiply(x);
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += x[static_cast<std::size_t>(i)] * bx[static_cast<std::size_t>(i)];
    return std::sqrt(s);
  };

  double nb = b_norm(res.vector);
  for (double& v : res.vector) v /= nb;

  double lambda_old = 0.0;
  for (int it = 1; it <= max_outer; ++it) {
    std::vector<double> bx = b.multiply(res.vector);
    CgResult solve = solve_cg(a, bx, cg_tol, cg_maxiter);
    res.vector = std::move(solve.x);
    nb = b_norm(res.vector);
    for (double& v : res.vector) v /= nb;

    std::vector<double> ax = a.multiply(res.vector);
    bx = b.multiply(res.vector);
    double xa = 0.0, xb = 0.0;
    for (int i = 0; i < n; ++i) {
      xa += res.vector[static_cast<std::size_t>(i)] * ax[static_cast<std::size_t>(i)];
      xb += res.vector[static_cast<std::size_t>(i)] * bx[static_cast<std::size_t>(i)];
    }
    const double lambda = xa / xb;
    res.eigenvalue = lambda;
    res.iterations = it;
    if (it > 1 && std::abs(lambda - lambda_old) <= rel_tol * std::abs(lambda)) return res;
    lambda_old = lambda;
  }
  fail(ErrorKind::EigenStagnation, "inverse power iteration stagnated after " + std::to_string(max_outer) +
                                       " outer iterations");
}

} // namespace relast
