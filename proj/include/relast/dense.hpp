#ifndef RELAST_DENSE_HPP
#define RELAST_DENSE_HPP

#include <vector>

#include "relast/error.hpp"

namespace relast {

// Small dense helpers shared by the spectral estimators and the test oracles.

// Eigenvalues of a symmetric n x n matrix (row-major) by cyclic Jacobi
// rotations; ascending order. Optionally accumulates eigenvectors (columns).
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n,
                                          std::vector<double>* eigenvectors = nullptr);

// Solves A x = b for symmetric positive definite A (row-major) by dense
// Cholesky; throws NotPositiveDefinite on a failed pivot.
std::vector<double> solve_spd(std::vector<double> a, std::vector<double> b, int n);

// Solves A x = b by partial-pivot LU for a general square A.
std::vector<double> solve_lu(std::vector<double> a, std::vector<double> b, int n);

} // namespace relast

#endif
