#pragma once

#include <complex>
#include <span>
#include <vector>

namespace conebal {

bool is_power_of_two(int n);

// Uniform nodes t_k = 2*pi*k/n, k = 0..n-1.
std::vector<double> uniform_nodes(int n);

// Trigonometric interpolant of a real 2*pi-periodic function sampled at n
// uniform nodes, n a power of two. Backed by FFTW half-spectrum transforms;
// evaluation anywhere on the line, exact at the nodes.
class FourierSeries {
 public:
  FourierSeries() = default;

  static FourierSeries fit(std::span<const double> samples);

  int grid_size() const { return n_; }

  // Interpolant value at arbitrary t (2*pi-periodic extension).
  double operator()(double t) const;

  // Spectral derivative. For odd orders the Nyquist mode is zeroed so the
  // result stays real-valued and antisymmetric.
  FourierSeries derivative(int order = 1) const;

  // Values of the interpolant back at the n uniform nodes.
  std::vector<double> node_values() const;

  // Copy with coefficients below rel_tol * max|c_k| dropped; cheap to
  // evaluate inside ODE right-hand sides.
  FourierSeries truncated(double rel_tol) const;

  double max_abs_coefficient() const;

  // Energy fraction carried by the top octave of frequencies; a crude
  // aliasing diagnostic for raw sampled input.
  double tail_fraction() const;

 private:
  int n_ = 0;
  int kmax_ = 0;                             // highest retained frequency
  std::vector<std::complex<double>> coef_;   // k = 0 .. n/2, scaled by 1/n
};

// fit -> derivative -> node_values in one call.
std::vector<double> spectral_derivative(std::span<const double> samples,
                                        int order);

}  // namespace conebal
