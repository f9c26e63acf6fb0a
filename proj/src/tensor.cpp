#include "relast/tensor.hpp"

#include <cmath>
#include <cstring>

namespace relast {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ContractVariance: return "contract-variance";
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::MetricDegenerate: return "metric-degenerate";
    case ErrorKind::ChartExit: return "chart-exit";
    case ErrorKind::Divergence: return "divergence";
    case ErrorKind::Capability: return "capability";
    case ErrorKind::ImmersionFailure: return "immersion-failure";
    case ErrorKind::DisplacementTooLarge: return "displacement-too-large";
    case ErrorKind::NonConvergence: return "nonconvergence";
    case ErrorKind::NotPositiveDefinite: return "not-positive-definite";
    case ErrorKind::ContractionFailure: return "contraction-failure";
    case ErrorKind::EigenStagnation: return "eigen-stagnation";
    case ErrorKind::ConfigError: return "config-error";
    case ErrorKind::MeshFormat: return "mesh-format";
    case ErrorKind::IoError: return "io-error";
  }
  return "unknown";
}

namespace {

int pow_int(int base, int exp) {
  int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void check_dim(int dim) {
  if (dim < 2 || dim > kMaxDim) fail(ErrorKind::Dimension, "tensor dim must be 2 or 3");
}

} // namespace

TensorValue::TensorValue(int dim, std::initializer_list<Slot> variance)
    : TensorValue(dim, std::vector<Slot>(variance)) {}

TensorValue::TensorValue(int dim, const std::vector<Slot>& variance) {
  check_dim(dim);
  if (variance.size() > kMaxRank) fail(ErrorKind::Dimension, "tensor rank exceeds 4");
  dim_ = dim;
  rank_ = static_cast<int>(variance.size());
  size_ = pow_int(dim, rank_);
  for (int k = 0; k < rank_; ++k) variance_[static_cast<std::size_t>(k)] = variance[static_cast<std::size_t>(k)];
  comp_.fill(0.0);
}

TensorValue TensorValue::scalar(int dim, double value) {
  TensorValue t(dim, std::vector<Slot>{});
  t.comp_[0] = value;
  return t;
}

TensorValue TensorValue::kronecker(int dim) {
  TensorValue t(dim, {Slot::Contra, Slot::Cov});
  for (int i = 0; i < dim; ++i) t.at({i, i}) = 1.0;
  return t;
}

int TensorValue::flatten(std::initializer_list<int> idx) const {
  if (static_cast<int>(idx.size()) != rank_) fail(ErrorKind::Dimension, "index count does not match rank");
  int flat = 0;
  for (int i : idx) flat = flat * dim_ + i;
  return flat;
}

TensorValue& TensorValue::operator+=(const TensorValue& other) {
  if (dim_ != other.dim_ || rank_ != other.rank_) fail(ErrorKind::Dimension, "tensor shape mismatch in +=");
  for (int i = 0; i < size_; ++i) comp_[static_cast<std::size_t>(i)] += other.comp_[static_cast<std::size_t>(i)];
  return *this;
}

TensorValue& TensorValue::operator*=(double s) {
  for (int i = 0; i < size_; ++i) comp_[static_cast<std::size_t>(i)] *= s;
  return *this;
}

TensorValue operator+(TensorValue a, const TensorValue& b) {
  a += b;
  return a;
}

TensorValue operator-(TensorValue a, const TensorValue& b) {
  TensorValue c = b;
  c *= -1.0;
  a += c;
  return a;
}

TensorValue operator*(double s, TensorValue a) {
  a *= s;
  return a;
}

bool cholesky3(int n, const double* a, double* l) {
  std::memset(l, 0, sizeof(double) * static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double sum = a[i * n + j];
      for (int k = 0; k < j; ++k) sum -= l[i * n + k] * l[j * n + k];
      if (i == j) {
        if (!(sum > 0.0)) return false;
        l[i * n + i] = std::sqrt(sum);
      } else {
        l[i * n + j] = sum / l[j * n + j];
      }
    }
  }
  return true;
}

MetricValue::MetricValue(int dim, const double* g) {
  check_dim(dim);
  dim_ = dim;
  // store the symmetric part exactly once: fill i<=j and mirror
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      g_[static_cast<std::size_t>(i * dim + j)] = g[i * dim + j];
      g_[static_cast<std::size_t>(j * dim + i)] = g[i * dim + j];
    }

  double l[9];
  if (!cholesky3(dim, g_.data(), l)) fail(ErrorKind::MetricDegenerate, "metric is not positive definite");

  double diag_prod = 1.0;
  for (int i = 0; i < dim; ++i) diag_prod *= l[i * dim + i];
  det_ = diag_prod * diag_prod;
  sqrt_det_ = diag_prod;

  // inverse from the factorization: solve L L^T X = I column by column
  for (int c = 0; c < dim; ++c) {
    double y[3] = {0, 0, 0};
    for (int i = 0; i < dim; ++i) {
      double sum = (i == c) ? 1.0 : 0.0;
      for (int k = 0; k < i; ++k) sum -= l[i * dim + k] * y[k];
      y[i] = sum / l[i * dim + i];
    }
    double x[3] = {0, 0, 0};
    for (int i = dim - 1; i >= 0; --i) {
      double sum = y[i];
      for (int k = i + 1; k < dim; ++k) sum -= l[k * dim + i] * x[k];
      x[i] = sum / l[i * dim + i];
    }
    for (int i = 0; i < dim; ++i) ginv_[static_cast<std::size_t>(i * dim + c)] = x[i];
  }
  // the true inverse is symmetric; mirror to remove factorization round-off
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      double v = 0.5 * (ginv_[static_cast<std::size_t>(i * dim + j)] + ginv_[static_cast<std::size_t>(j * dim + i)]);
      ginv_[static_cast<std::size_t>(i * dim + j)] = v;
      ginv_[static_cast<std::size_t>(j * dim + i)] = v;
    }
}

MetricValue MetricValue::euclidean(int dim) {
  double g[9] = {0};
  for (int i = 0; i < dim; ++i) g[i * dim + i] = 1.0;
  MetricValue m(dim, g);
  double zeros[27] = {0};
  m.set_dg(zeros);
  return m;
}

void MetricValue::set_dg(const double* dg) {
  int n = dim_ * dim_ * dim_;
  for (int i = 0; i < n; ++i) dg_[static_cast<std::size_t>(i)] = dg[i];
  has_dg_ = true;
}

void MetricValue::set_d2g(const double* d2g) {
  int n = dim_ * dim_ * dim_ * dim_;
  for (int i = 0; i < n; ++i) d2g_[static_cast<std::size_t>(i)] = d2g[i];
  has_d2g_ = true;
}

TensorValue MetricValue::metric_tensor() const {
  TensorValue t(dim_, {Slot::Cov, Slot::Cov});
  for (int i = 0; i < dim_ * dim_; ++i) t[i] = g_[static_cast<std::size_t>(i)];
  return t;
}

TensorValue MetricValue::inverse_tensor() const {
  TensorValue t(dim_, {Slot::Contra, Slot::Contra});
  for (int i = 0; i < dim_ * dim_; ++i) t[i] = ginv_[static_cast<std::size_t>(i)];
  return t;
}

TensorValue contract(const TensorValue& a, const TensorValue& b,
                     const std::vector<std::pair<int, int>>& slot_pairs) {
  if (a.dim() != b.dim()) fail(ErrorKind::Dimension, "contract: dim mismatch");
  const int dim = a.dim();
  const int np = static_cast<int>(slot_pairs.size());

  bool a_used[kMaxRank] = {false, false, false, false};
  bool b_used[kMaxRank] = {false, false, false, false};
  for (auto [sa, sb] : slot_pairs) {
    if (sa < 0 || sa >= a.rank() || sb < 0 || sb >= b.rank())
      fail(ErrorKind::Dimension, "contract: slot index out of range");
    if (a_used[sa] || b_used[sb]) fail(ErrorKind::Dimension, "contract: slot paired twice");
    a_used[sa] = true;
    b_used[sb] = true;
    if (a.slot(sa) == b.slot(sb)) fail(ErrorKind::ContractVariance, "contract: paired slots have equal variance");
  }

  std::vector<Slot> out_variance;
  std::vector<int> a_free, b_free;
  for (int k = 0; k < a.rank(); ++k)
    if (!a_used[k]) {
      out_variance.push_back(a.slot(k));
      a_free.push_back(k);
    }
  for (int k = 0; k < b.rank(); ++k)
    if (!b_used[k]) {
      out_variance.push_back(b.slot(k));
      b_free.push_back(k);
    }
  if (static_cast<int>(out_variance.size()) > kMaxRank)
    fail(ErrorKind::Dimension, "contract: result rank exceeds 4");

  TensorValue out(dim, out_variance);

  const int n_a_free = static_cast<int>(a_free.size());
  const int n_b_free = static_cast<int>(b_free.size());
  const int n_out = out.size();
  int sum_count = 1;
  for (int i = 0; i < np; ++i) sum_count *= dim;

  int a_stride[kMaxRank], b_stride[kMaxRank];
  for (int k = 0; k < a.rank(); ++k) a_stride[k] = pow_int(dim, a.rank() - 1 - k);
  for (int k = 0; k < b.rank(); ++k) b_stride[k] = pow_int(dim, b.rank() - 1 - k);

  for (int flat = 0; flat < n_out; ++flat) {
    // decode output index into free indices of a then b
    int rem = flat;
    int idx_free[kMaxRank * 2];
    for (int k = static_cast<int>(out_variance.size()) - 1; k >= 0; --k) {
      idx_free[k] = rem % dim;
      rem /= dim;
    }
    int a_base = 0, b_base = 0;
    for (int k = 0; k < n_a_free; ++k) a_base += idx_free[k] * a_stride[a_free[static_cast<std::size_t>(k)]];
    for (int k = 0; k < n_b_free; ++k)
      b_base += idx_free[n_a_free + k] * b_stride[b_free[static_cast<std::size_t>(k)]];

    double sum = 0.0;
    for (int s = 0; s < sum_count; ++s) {
      int srem = s;
      int a_off = 0, b_off = 0;
      for (int p = np - 1; p >= 0; --p) {
        int iv = srem % dim;
        srem /= dim;
        a_off += iv * a_stride[slot_pairs[static_cast<std::size_t>(p)].first];
        b_off += iv * b_stride[slot_pairs[static_cast<std::size_t>(p)].second];
      }
      sum += a[a_base + a_off] * b[b_base + b_off];
    }
    out[flat] = sum;
  }
  return out;
}

TensorValue christoffels(const MetricValue& m) {
  if (!m.has_dg()) fail(ErrorKind::Capability, "christoffels: metric has no first derivatives");
  const int d = m.dim();
  TensorValue gamma(d, {Slot::Contra, Slot::Cov, Slot::Cov});
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) {
        double sum = 0.0;
        for (int l = 0; l < d; ++l)
          sum += 0.5 * m.ginv(k, l) * (m.dg(i, j, l) + m.dg(j, i, l) - m.dg(l, i, j));
        gamma.at({k, i, j}) = sum;
        gamma.at({k, j, i}) = sum;
      }
  return gamma;
}

TensorValue covariant_derivative_vector(const TensorValue& xi, const double* dxi,
                                        const TensorValue& gamma) {
  const int d = xi.dim();
  if (xi.rank() != 1 || xi.slot(0) != Slot::Contra)
    fail(ErrorKind::Dimension, "covariant_derivative_vector: xi must be (1,0)");
  TensorValue grad(d, {Slot::Cov, Slot::Contra}); // slot order (i, j): nabla_i xi^j
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double sum = dxi[i * d + j];
      for (int k = 0; k < d; ++k) sum += gamma.at({j, i, k}) * xi[k];
      grad.at({i, j}) = sum;
    }
  return grad;
}

TensorValue lie_derivative_metric(const TensorValue& xi, const double* dxi, const MetricValue& m) {
  if (!m.has_dg()) fail(ErrorKind::Capability, "lie_derivative_metric: metric has no first derivatives");
  const int d = m.dim();
  TensorValue lie(d, {Slot::Cov, Slot::Cov});
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      double sum = 0.0;
      for (int k = 0; k < d; ++k) {
        sum += xi[k] * m.dg(k, i, j);
        sum += m.g(k, j) * dxi[i * d + k];
        sum += m.g(i, k) * dxi[j * d + k];
      }
      lie.at({i, j}) = sum;
      lie.at({j, i}) = sum;
    }
  return lie;
}

double volume_density(const MetricValue& m) { return m.sqrt_det(); }

TensorValue raise_lower(const TensorValue& t, int slot, const MetricValue& m, RaiseLower direction) {
  if (slot < 0 || slot >= t.rank()) fail(ErrorKind::Dimension, "raise_lower: slot out of range");
  const Slot expect = (direction == RaiseLower::Raise) ? Slot::Cov : Slot::Contra;
  if (t.slot(slot) != expect) fail(ErrorKind::ContractVariance, "raise_lower: slot variance does not match direction");

  const TensorValue metric = (direction == RaiseLower::Raise) ? m.inverse_tensor() : m.metric_tensor();
  // contract slot with the metric's second slot, then move the new slot back in place
  TensorValue c = contract(t, metric, {{slot, 1}});
  // c has t's remaining slots followed by the new slot; restore original order
  std::vector<Slot> variance;
  for (int k = 0; k < t.rank(); ++k)
    variance.push_back(k == slot ? (direction == RaiseLower::Raise ? Slot::Contra : Slot::Cov) : t.slot(k));
  TensorValue out(t.dim(), variance);

  const int d = t.dim();
  const int rank = t.rank();
  int out_stride[kMaxRank], c_stride[kMaxRank];
  for (int k = 0; k < rank; ++k) out_stride[k] = pow_int(d, rank - 1 - k);
  for (int k = 0; k < rank; ++k) c_stride[k] = pow_int(d, rank - 1 - k);

  for (int flat = 0; flat < out.size(); ++flat) {
    int rem = flat;
    int idx[kMaxRank];
    for (int k = rank - 1; k >= 0; --k) {
      idx[k] = rem % d;
      rem /= d;
    }
    // map: c's layout is (slots of t except `slot`, then the metric slot)
    int c_flat = 0;
    int pos = 0;
    for (int k = 0; k < rank; ++k) {
      if (k == slot) continue;
      c_flat += idx[k] * c_stride[pos];
      ++pos;
    }
    c_flat += idx[slot] * c_stride[rank - 1];
    out[flat] = c[c_flat];
  }
  return out;
}

} // namespace relast
