#include "relast/constitutive.hpp"

#include <cmath>
#include <random>

#include "relast/dense.hpp"

namespace relast {

MaterialModel MaterialModel::svk(double lambda, double mu) {
  if (!(mu > 0.0)) fail(ErrorKind::ConfigError, "material: mu > 0 required");
  if (lambda < 0.0) fail(ErrorKind::ConfigError, "material: lambda >= 0 required");
  return MaterialModel{lambda, mu};
}

TensorValue elasticity_tensor(const MaterialModel& mat, const MetricValue& g0) {
  const int d = g0.dim();
  TensorValue A(d, {Slot::Contra, Slot::Contra, Slot::Contra, Slot::Contra});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          A.at({i, j, k, l}) = mat.lambda * g0.ginv(i, j) * g0.ginv(k, l) +
                               mat.mu * (g0.ginv(i, k) * g0.ginv(j, l) + g0.ginv(i, l) * g0.ginv(j, k));
  return A;
}

double stored_energy(const TensorValue& A, const TensorValue& E) {
  const int d = E.dim();
  double s = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) s += A.at({i, j, k, l}) * E.at({k, l}) * E.at({i, j});
  return 0.5 * s;
}

StressValue stress_sigma(const TensorValue& A, const TensorValue& E) {
  const int d = E.dim();
  StressValue sv;
  sv.sigma = TensorValue(d, {Slot::Contra, Slot::Contra});
  sv.carrier = StressCarrier::Reference;
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      double s = 0.0;
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) s += A.at({i, j, k, l}) * E.at({k, l});
      sv.sigma.at({i, j}) = s;
      sv.sigma.at({j, i}) = s;
    }
  return sv;
}

StressRecord stress_convert(const StressValue& sigma, const MetricValue& g_phi, const double* y,
                            const double* jac, const MetricModel& model) {
  const int d = g_phi.dim();
  MetricValue ghat = model.evaluate(y);

  double det;
  if (d == 2)
    det = jac[0] * jac[3] - jac[1] * jac[2];
  else
    det = jac[0] * (jac[4] * jac[8] - jac[5] * jac[7]) - jac[1] * (jac[3] * jac[8] - jac[5] * jac[6]) +
          jac[2] * (jac[3] * jac[7] - jac[4] * jac[6]);
  if (det == 0.0) fail(ErrorKind::ImmersionFailure, "stress_convert: singular Jacobian");

  StressRecord rec;
  rec.carrier = sigma.carrier;
  rec.T = TensorValue(d, {Slot::Contra, Slot::Cov});
  rec.T_tilde = TensorValue(d, {Slot::Contra, Slot::Cov});
  rec.Sigma_hat = TensorValue(d, {Slot::Contra, Slot::Contra});
  rec.T_hat = TensorValue(d, {Slot::Contra, Slot::Cov});

  const TensorValue& S = sigma.sigma;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double t = 0.0;
      for (int k = 0; k < d; ++k) t += g_phi.g(j, k) * S.at({i, k});
      rec.T.at({i, j}) = t;
    }
  for (int i = 0; i < d; ++i)
    for (int al = 0; al < d; ++al) {
      double t = 0.0;
      for (int be = 0; be < d; ++be)
        for (int j = 0; j < d; ++j) t += ghat.g(al, be) * jac[be * d + j] * S.at({i, j});
      rec.T_tilde.at({i, al}) = t;
    }
  for (int al = 0; al < d; ++al)
    for (int be = 0; be < d; ++be) {
      double t = 0.0;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) t += jac[al * d + i] * jac[be * d + j] * S.at({i, j});
      rec.Sigma_hat.at({al, be}) = t;
    }
  for (int al = 0; al < d; ++al)
    for (int be = 0; be < d; ++be) {
      double t = 0.0;
      for (int ta = 0; ta < d; ++ta) t += ghat.g(be, ta) * rec.Sigma_hat.at({al, ta});
      rec.T_hat.at({al, be}) = t;
    }
  return rec;
}

double positive_definiteness_estimate(const TensorValue& A, const MetricValue& g0, int samples) {
  const int d = g0.dim();
  const int m = d * (d + 1) / 2; // dim of the symmetric-tensor space

  // g0-orthonormal basis of symmetric (0,2) tensors: map the Frobenius
  // orthonormal basis through H = L Htilde L^T with g0 = L L^T.
  double l[9];
  cholesky3(d, g0.metric_tensor().data(), l);

  std::vector<TensorValue> basis;
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      double ht[9] = {0};
      const double v = (i == j) ? 1.0 : 1.0 / std::sqrt(2.0);
      ht[i * d + j] = v;
      ht[j * d + i] = v;
      TensorValue H(d, {Slot::Cov, Slot::Cov});
      for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) {
          double s = 0.0;
          for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) s += l[p * d + a] * ht[a * d + b] * l[q * d + b];
          H.at({p, q}) = s;
        }
      basis.push_back(H);
    }

  auto quad = [&](const TensorValue& H, const TensorValue& K) {
    double s = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          for (int q = 0; q < d; ++q) s += A.at({i, j, k, q}) * H.at({k, q}) * K.at({i, j});
    return s;
  };

  std::vector<double> qmat(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      qmat[static_cast<std::size_t>(a) * m + b] =
          quad(basis[static_cast<std::size_t>(a)], basis[static_cast<std::size_t>(b)]);
  const double exact = symmetric_eigenvalues(qmat, m).front();

  // brute-force cross check on random unit tensors
  std::mt19937_64 rng(20240915u);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double sampled = exact;
  for (int s = 0; s < samples; ++s) {
    TensorValue H(d, {Slot::Cov, Slot::Cov});
    double coeff[6];
    double norm2 = 0.0;
    for (int a = 0; a < m; ++a) {
      coeff[a] = gauss(rng);
      norm2 += coeff[a] * coeff[a];
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (int a = 0; a < m; ++a) {
      TensorValue scaled = basis[static_cast<std::size_t>(a)];
      scaled *= coeff[a] * inv;
      H += scaled;
    }
    sampled = std::min(sampled, quad(H, H));
  }
  return std::min(exact, sampled);
}

} // namespace relast
