#pragma once

#include <cstdint>

namespace conebal {

// Numerical tolerances shared across the pipeline. Defaults follow the
// contracts in the module documentation; the CLI exposes the first three.
struct Tolerances {
  // Monodromy trace classification band around |trace| = 2.
  double trace_class = 1e-7;
  // A beta array with max |beta| below this is considered identically zero.
  double beta_flat = 1e-7;
  // Relative tolerance for the adaptive ODE integrator.
  double ode_rel = 1e-11;
  // Absolute tolerance for the adaptive ODE integrator.
  double ode_abs = 1e-13;

  // Gauge self-test: max |c2| allowed after Wilczynski normalization.
  double gauge = 1e-6;
  // Relative degeneracy threshold on the curvature determinant.
  double degenerate = 1e-10;
  // Frame closure / frame ODE residual bound.
  double closure = 1e-7;
  // Allowed deviation of the re-extracted alpha from alpha_star.
  double balance_verify = 1e-5;
};

constexpr std::uint64_t kDefaultSeed = 20240817ULL;

}  // namespace conebal
