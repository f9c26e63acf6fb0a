#include "relast/dense.hpp"

#include <algorithm>
#include <cmath>

namespace relast {

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n, std::vector<double>* eigenvectors) {
  if (eigenvectors) {
    eigenvectors->assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) (*eigenvectors)[static_cast<std::size_t>(i) * n + i] = 1.0;
  }
  auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += A(i, j) * A(i, j);
    if (off < 1e-30) break;

    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(A(p, q)) < 1e-300) continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * A(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = A(k, p), akq = A(k, q);
          A(k, p) = c * akp - s * akq;
          A(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = A(p, k), aqk = A(q, k);
          A(p, k) = c * apk - s * aqk;
          A(q, k) = s * apk + c * aqk;
        }
        if (eigenvectors) {
          for (int k = 0; k < n; ++k) {
            double& vkp = (*eigenvectors)[static_cast<std::size_t>(k) * n + p];
            double& vkq = (*eigenvectors)[static_cast<std::size_t>(k) * n + q];
            const double tp = vkp, tq = vkq;
            vkp = c * tp - s * tq;
            vkq = s * tp + c * tq;
          }
        }
      }
  }

  std::vector<double> ev(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = A(i, i);
  if (eigenvectors) {
    // sort eigenvalues ascending, permuting eigenvector columns alongside
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return ev[static_cast<std::size_t>(x)] < ev[static_cast<std::size_t>(y)]; });
    std::vector<double> ev_sorted(static_cast<std::size_t>(n));
    std::vector<double> vec_sorted(static_cast<std::size_t>(n) * n);
    for (int c = 0; c < n; ++c) {
      ev_sorted[static_cast<std::size_t>(c)] = ev[static_cast<std::size_t>(order[static_cast<std::size_t>(c)])];
      for (int r = 0; r < n; ++r)
        vec_sorted[static_cast<std::size_t>(r) * n + c] =
            (*eigenvectors)[static_cast<std::size_t>(r) * n + order[static_cast<std::size_t>(c)]];
    }
    *eigenvectors = std::move(vec_sorted);
    return ev_sorted;
  }
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::vector<double> solve_spd(std::vector<double> a, std::vector<double> b, int n) {
  auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  // in-place Cholesky, lower triangle
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double sum = A(i, j);
      for (int k = 0; k < j; ++k) sum -= A(i, k) * A(j, k);
      if (i == j) {
        if (!(sum > 0.0)) fail(ErrorKind::NotPositiveDefinite, "dense Cholesky pivot failure");
        A(i, i) = std::sqrt(sum);
      } else {
        A(i, j) = sum / A(j, j);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    double sum = b[static_cast<std::size_t>(i)];
    for (int k = 0; k < i; ++k) sum -= A(i, k) * b[static_cast<std::size_t>(k)];
    b[static_cast<std::size_t>(i)] = sum / A(i, i);
  }
  for (int i = n - 1; i >= 0; --i) {
    double sum = b[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < n; ++k) sum -= A(k, i) * b[static_cast<std::size_t>(k)];
    b[static_cast<std::size_t>(i)] = sum / A(i, i);
  }
  return b;
}

std::vector<double> solve_lu(std::vector<double> a, std::vector<double> b, int n) {
  auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  std::vector<int> piv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) piv[static_cast<std::size_t>(i)] = i;

  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(A(i, k)) > std::abs(A(p, k))) p = i;
    if (A(p, k) == 0.0) fail(ErrorKind::Dimension, "singular matrix in LU solve");
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(A(p, j), A(k, j));
      std::swap(b[static_cast<std::size_t>(p)], b[static_cast<std::size_t>(k)]);
    }
    for (int i = k + 1; i < n; ++i) {
      const double f = A(i, k) / A(k, k);
      A(i, k) = f;
      for (int j = k + 1; j < n; ++j) A(i, j) -= f * A(k, j);
      b[static_cast<std::size_t>(i)] -= f * b[static_cast<std::size_t>(k)];
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    double sum = b[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < n; ++k) sum -= A(i, k) * b[static_cast<std::size_t>(k)];
    b[static_cast<std::size_t>(i)] = sum / A(i, i);
  }
  return b;
}

} // namespace relast
