#include "phasediff/errors.hpp"

namespace phasediff {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::bad_bounds: return "BadBounds";
    case ErrorCode::bad_size: return "BadSize";
    case ErrorCode::non_resolvable_gauge: return "NonResolvableGauge";
    case ErrorCode::unsupported_dimension: return "UnsupportedDimension";
    case ErrorCode::shape_mismatch: return "ShapeMismatch";
    case ErrorCode::out_of_domain: return "OutOfDomain";
    case ErrorCode::nan_input: return "NanInput";
    case ErrorCode::step_too_large: return "StepTooLarge";
    case ErrorCode::convergence_failure: return "ConvergenceFailure";
    case ErrorCode::unsupported_hamiltonian: return "UnsupportedHamiltonian";
    case ErrorCode::cfl_violation: return "CflViolation";
    case ErrorCode::degenerate_kernel: return "DegenerateKernel";
    case ErrorCode::boundary_decay: return "BoundaryDecayViolation";
    case ErrorCode::grid_too_large: return "GridTooLarge";
    case ErrorCode::variance_explosion: return "VarianceExplosion";
    case ErrorCode::config_invalid: return "ConfigInvalid";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace phasediff
