#ifndef RELAST_ERROR_HPP
#define RELAST_ERROR_HPP

#include <stdexcept>
#include <string>

namespace relast {

enum class ErrorKind {
  ContractVariance,     // paired slots do not have opposite variance
  Dimension,            // incompatible dimensions or shapes
  MetricDegenerate,     // metric not positive definite / zero determinant
  ChartExit,            // trajectory left the admissible chart region
  Divergence,           // non-finite state encountered
  Capability,           // a required ingredient (e.g. second derivatives) is missing
  ImmersionFailure,     // singular or degenerate Jacobian
  DisplacementTooLarge, // exp-map admissibility bound violated
  NonConvergence,       // iterative solver hit its iteration limit
  NotPositiveDefinite,  // operator found indefinite during a solve
  ContractionFailure,   // fixed-Jacobian iteration failed to contract
  EigenStagnation,      // power iteration did not settle
  ConfigError,          // bad key/value in a run configuration
  MeshFormat,           // malformed mesh or field file
  IoError,              // filesystem failure
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

const char* error_kind_name(ErrorKind kind);

} // namespace relast

#endif
