#ifndef CSTHERM_COHERENT_HPP
#define CSTHERM_COHERENT_HPP

#include <complex>
#include <vector>

#include "cstherm/constants.hpp"

namespace cstherm {

// Harmonic oscillator parameters. Throws std::domain_error unless
// mass > 0 and omega > 0.
struct OscillatorConfig {
  double mass;   // kg
  double omega;  // rad/s
  ConstantsSet cs;

  OscillatorConfig(double mass, double omega, ConstantsSet cs);
};

// Complex displacement of a coherent state together with its cached mean
// occupation nbar = m omega |d|^2 / (2 hbar).
struct CoherentAmplitude {
  std::complex<double> d;  // m
  double nbar;

  static CoherentAmplitude from_displacement(const OscillatorConfig& cfg,
                                             std::complex<double> d);
};

/*!
  Diagonal of the coherent-state density matrix in the number basis:
  weights[n] = e^{-nbar} nbar^n / n! for n = 0..n_max, with the truncation
  index chosen so the missing tail mass stays below the requested tolerance.
*/
struct FockWeights {
  double nbar;
  std::vector<double> weights;

  int n_max() const { return static_cast<int>(weights.size()) - 1; }
};

// m omega |d|^2 / (2 hbar)
double occupation_from_amplitude(const OscillatorConfig& cfg, std::complex<double> d);

// Poisson number-basis weights via the multiplicative recurrence
// w_{n+1} = w_n nbar/(n+1); log-space recurrence above nbar = 700 where
// e^{-nbar} underflows. Throws std::domain_error for nbar < 0 or tol
// outside (0, 1).
FockWeights fock_weights(double nbar, double tol = 1e-12);

// |<f|d>|^2 = exp(-(m omega / 2 hbar) |d - f|^2)
double overlap_sq(const OscillatorConfig& cfg, std::complex<double> d,
                  std::complex<double> f);

// ln Q for the coherent-state diagonal ensemble: ln Q = nbar. Kept in log
// space; Q itself overflows already at nbar ~ 710.
double log_partition_function(double nbar);

// hbar omega (nbar + 1/2)
double mean_energy(const OscillatorConfig& cfg, double nbar);

}  // namespace cstherm

#endif
