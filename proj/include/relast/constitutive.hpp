#ifndef RELAST_CONSTITUTIVE_HPP
#define RELAST_CONSTITUTIVE_HPP

#include "relast/geometry.hpp"
#include "relast/tensor.hpp"

namespace relast {

// Quadratic (Saint Venant - Kirchhoff) material. The pointwise interface
// (stored energy W(E) and its derivative Sigma(E)) is what the solvers use,
// so other laws can slot in behind the same calls.
struct MaterialModel {
  double lambda = 0.0; // >= 0
  double mu = 1.0;     // > 0

  static MaterialModel svk(double lambda, double mu);
};

// Stress over a declared volume-form carrier. Components are kept over the
// reference form by default; converting to the deformed carrier multiplies by
// the density ratio rho[phi].
enum class StressCarrier { Reference, Deformed };

struct StressValue {
  TensorValue sigma; // (2,0) symmetric
  StressCarrier carrier = StressCarrier::Reference;
};

// A^{ijkl} = lambda g0^{ij} g0^{kl} + mu (g0^{ik} g0^{jl} + g0^{il} g0^{jk});
// carries the pair symmetries A^{ijkl} = A^{klij} = A^{jikl} = A^{ijlk} exactly.
TensorValue elasticity_tensor(const MaterialModel& mat, const MetricValue& g0);

// (A : E) : E / 2; for the SVK tensor this equals
// lambda/2 (tr E)^2 + mu |E|^2 with traces and norms taken through g0.
double stored_energy(const TensorValue& A, const TensorValue& E);

// Sigma^{ij} = A^{ijkl} E_kl over the reference carrier.
StressValue stress_sigma(const TensorValue& A, const TensorValue& E);

// All stress descriptions derived from Sigma at a chart point:
//   T^i_j       = g_jk Sigma^{ik}            mixed, on M
//   Ttilde^i_a  = ghat_ab(y) J^b_j Sigma^{ij}  two-point
//   Sigmahat^ab = J^a_i J^b_j Sigma^{ij}     ambient contravariant
//   That^a_b    = ghat_bt Sigmahat^{at}      ambient mixed
struct StressRecord {
  TensorValue T;
  TensorValue T_tilde;
  TensorValue Sigma_hat;
  TensorValue T_hat;
  StressCarrier carrier = StressCarrier::Reference;
};

StressRecord stress_convert(const StressValue& sigma, const MetricValue& g_phi, const double* y,
                            const double* jac, const MetricModel& model);

// Smallest eigenvalue of H -> (A:H):H over unit-|H|_{g0} symmetric H, computed
// exactly from the matrix of the quadratic form in a g0-orthonormal basis of
// symmetric tensors and cross-checked against `samples` random unit tensors.
double positive_definiteness_estimate(const TensorValue& A, const MetricValue& g0, int samples);

} // namespace relast

#endif
