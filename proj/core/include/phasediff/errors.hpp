#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace phasediff {

enum class ErrorCode {
  bad_bounds,             // domain bounds empty, non-finite, or too narrow
  bad_size,               // grid extent not a supported size (powers of two)
  non_resolvable_gauge,   // x-resolution cannot represent the momentum gauge
  unsupported_dimension,  // solvers are one-dimensional in this version
  shape_mismatch,         // array extent disagrees with the grid
  out_of_domain,          // point outside the grid bounds
  nan_input,              // non-finite value in an input field
  step_too_large,         // time step violates the stability precondition
  convergence_failure,    // refinement did not settle below tolerance
  unsupported_hamiltonian,// operation requires a separable Hamiltonian
  cfl_violation,          // advection displacement exceeds the domain quarter
  degenerate_kernel,      // smoothing kernel undefined for a=0 or b=0
  boundary_decay,         // field does not decay at the momentum boundaries
  grid_too_large,         // dense-operator path refuses grids this large
  variance_explosion,     // Monte Carlo effective sample size collapsed
  config_invalid,         // malformed run configuration
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace phasediff
