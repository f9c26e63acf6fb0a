#ifndef RELAST_TENSOR_HPP
#define RELAST_TENSOR_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "relast/error.hpp"

namespace relast {

// Chart-based pointwise tensor calculus for dim 2 and 3, rank up to 4.
// Components are stored dense, row-major in slot order.

enum class Slot : std::uint8_t { Contra, Cov };

constexpr int kMaxDim = 3;
constexpr int kMaxRank = 4;
constexpr int kMaxComponents = 81; // 3^4

class TensorValue {
public:
  TensorValue() = default;
  TensorValue(int dim, std::initializer_list<Slot> variance);
  TensorValue(int dim, const std::vector<Slot>& variance);

  static TensorValue scalar(int dim, double value);
  static TensorValue kronecker(int dim); // delta^i_j

  int dim() const { return dim_; }
  int rank() const { return rank_; }
  int size() const { return size_; }
  Slot slot(int k) const { return variance_[static_cast<std::size_t>(k)]; }
  const std::array<Slot, kMaxRank>& variance() const { return variance_; }

  double* data() { return comp_.data(); }
  const double* data() const { return comp_.data(); }

  double& operator[](int flat) { return comp_[static_cast<std::size_t>(flat)]; }
  double operator[](int flat) const { return comp_[static_cast<std::size_t>(flat)]; }

  double& at(std::initializer_list<int> idx) { return comp_[static_cast<std::size_t>(flatten(idx))]; }
  double at(std::initializer_list<int> idx) const { return comp_[static_cast<std::size_t>(flatten(idx))]; }

  int flatten(std::initializer_list<int> idx) const;

  TensorValue& operator+=(const TensorValue& other);
  TensorValue& operator*=(double s);

private:
  int dim_ = 0;
  int rank_ = 0;
  int size_ = 0;
  std::array<Slot, kMaxRank> variance_{};
  std::array<double, kMaxComponents> comp_{};
};

TensorValue operator+(TensorValue a, const TensorValue& b);
TensorValue operator-(TensorValue a, const TensorValue& b);
TensorValue operator*(double s, TensorValue a);

// Metric value at a point: g, optional first partials dg(k,i,j) = d_k g_ij and
// second partials d2g(l,k,i,j) = d_l d_k g_ij. The inverse is computed once via
// Cholesky; a failed factorization is the positive-definiteness test.
class MetricValue {
public:
  MetricValue() = default;
  // g row-major dim*dim, symmetric.
  MetricValue(int dim, const double* g);

  static MetricValue euclidean(int dim);

  void set_dg(const double* dg);   // dim^3 entries, (k,i,j) row-major
  void set_d2g(const double* d2g); // dim^4 entries, (l,k,i,j) row-major

  int dim() const { return dim_; }
  bool has_dg() const { return has_dg_; }
  bool has_d2g() const { return has_d2g_; }

  double g(int i, int j) const { return g_[static_cast<std::size_t>(i * dim_ + j)]; }
  double ginv(int i, int j) const { return ginv_[static_cast<std::size_t>(i * dim_ + j)]; }
  double dg(int k, int i, int j) const { return dg_[static_cast<std::size_t>((k * dim_ + i) * dim_ + j)]; }
  double d2g(int l, int k, int i, int j) const {
    return d2g_[static_cast<std::size_t>(((l * dim_ + k) * dim_ + i) * dim_ + j)];
  }

  double det() const { return det_; }
  double sqrt_det() const { return sqrt_det_; }

  TensorValue metric_tensor() const;  // (0,2)
  TensorValue inverse_tensor() const; // (2,0)

private:
  int dim_ = 0;
  bool has_dg_ = false;
  bool has_d2g_ = false;
  std::array<double, 9> g_{};
  std::array<double, 9> ginv_{};
  std::array<double, 27> dg_{};
  std::array<double, 81> d2g_{};
  double det_ = 0.0;
  double sqrt_det_ = 0.0;
};

// Partial contraction over the given (slot of a, slot of b) pairs; paired
// slots must carry opposite variance. Remaining slots of a precede those of b.
TensorValue contract(const TensorValue& a, const TensorValue& b,
                     const std::vector<std::pair<int, int>>& slot_pairs);

// Christoffel symbols of the second kind, Gamma^k_ij, symmetric in (i,j).
TensorValue christoffels(const MetricValue& m);

// nabla_i xi^j = d_i xi^j + Gamma^j_ik xi^k. dxi is (i,j) row-major with
// dxi(i,j) = d_i xi^j.
TensorValue covariant_derivative_vector(const TensorValue& xi, const double* dxi,
                                        const TensorValue& gamma);

// (L_xi g)_ij = xi^k d_k g_ij + g_kj d_i xi^k + g_ik d_j xi^k.
TensorValue lie_derivative_metric(const TensorValue& xi, const double* dxi, const MetricValue& m);

double volume_density(const MetricValue& m);

enum class RaiseLower { Raise, Lower };

TensorValue raise_lower(const TensorValue& t, int slot, const MetricValue& m, RaiseLower direction);

// Dense symmetric positive definite factorization A = L L^T, row-major, n <= 3.
// Returns false if a pivot is not strictly positive.
bool cholesky3(int n, const double* a, double* l);

} // namespace relast

#endif
