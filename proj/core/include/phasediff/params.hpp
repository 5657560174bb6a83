#pragma once

#include "phasediff/errors.hpp"

namespace phasediff {

// Model constants for the phase-space evolution. `a` (length/sqrt(time)) and
// `b` (momentum/sqrt(time)) set the coordinate and momentum diffusion
// strengths; `dim` is the number of spatial dimensions carried symbolically by
// the scalar terms (solvers accept dim == 1 only).
struct ModelParams {
  double hbar = 1.0;
  double mass = 1.0;
  double a = 1.0;
  double b = 1.0;
  int dim = 1;

  // Throws on non-finite or non-positive hbar/mass, negative a/b, dim < 1.
  void validate() const;

  // Relaxation rate a*b/hbar of the diffusion semigroup.
  double rate() const { return a * b / hbar; }

  // Standard deviation of the squared smoothing kernel, sqrt(a*hbar/(2b)).
  double smoothing_sigma() const;

  // Width of the stationary momentum profile, sqrt(hbar*b/a).
  double momentum_sigma() const;
};

}  // namespace phasediff
