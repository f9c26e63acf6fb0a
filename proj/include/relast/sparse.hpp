#ifndef RELAST_SPARSE_HPP
#define RELAST_SPARSE_HPP

#include <vector>

#include "relast/error.hpp"

namespace relast {

// Compressed sparse row matrix with a fixed symmetric pattern. Entries are
// accumulated in a deterministic order during assembly.
class CsrMatrix {
public:
  CsrMatrix() = default;

  // Builds the pattern from index pairs (row, col); duplicates are merged.
  static CsrMatrix from_pairs(int n, std::vector<std::pair<int, int>> pairs);

  int rows() const { return n_; }

  double& coeff(int row, int col); // existing entry only
  double coeff_or_zero(int row, int col) const;

  void multiply(const double* x, double* y) const;
  std::vector<double> multiply(const std::vector<double>& x) const;

  std::vector<double> diagonal() const;
  std::vector<double> dense() const; // row-major, for small oracles

  double max_abs() const;

  void clear_values();

  const std::vector<int>& row_ptr() const { return row_ptr_; }
  const std::vector<int>& col_idx() const { return col_idx_; }
  const std::vector<double>& values() const { return values_; }

private:
  int n_ = 0;
  std::vector<int> row_ptr_;
  std::vector<int> col_idx_;
  std::vector<double> values_;
};

struct CgResult {
  std::vector<double> x;
  int iterations = 0;
  std::vector<double> residual_history; // relative residuals per iteration
};

// Diagonally preconditioned conjugate gradients; relative l2 residual <= tol.
// Throws NotPositiveDefinite when p^T A p <= 0 is met, NonConvergence with the
// residual history attached to the message when maxiter is exhausted.
CgResult solve_cg(const CsrMatrix& a, const std::vector<double>& b, double tol, int maxiter);

struct PowerIterationResult {
  double eigenvalue = 0.0; // smallest generalized eigenvalue of A x = lambda B x
  std::vector<double> vector;
  int iterations = 0;
};

// Smallest eigenvalue of A x = lambda B x for SPD A by inverse power
// iteration with CG inner solves; rel_tol on the eigenvalue change.
PowerIterationResult smallest_generalized_eigenvalue(const CsrMatrix& a, const CsrMatrix& b,
                                                     double rel_tol = 1e-8, int max_outer = 500,
                                                     double cg_tol = 1e-12, int cg_maxiter = 200000);

} // namespace relast

#endif
