#include "cstherm/coherent.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cstherm {

namespace {

// Above this occupation e^{-nbar} underflows and the weight recurrence
// switches to log space.
constexpr double kLogSpaceThreshold = 700.0;

int truncation_rule(double nbar) {
  return static_cast<int>(std::ceil(nbar + 10.0 * std::sqrt(nbar) + 20.0));
}

}  // namespace

OscillatorConfig::OscillatorConfig(double mass_, double omega_, ConstantsSet cs_)
    : mass(mass_), omega(omega_), cs(std::move(cs_)) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw std::domain_error("OscillatorConfig: mass must be finite and > 0");
  }
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw std::domain_error("OscillatorConfig: omega must be finite and > 0");
  }
}

CoherentAmplitude CoherentAmplitude::from_displacement(const OscillatorConfig& cfg,
                                                       std::complex<double> d) {
  return CoherentAmplitude{d, occupation_from_amplitude(cfg, d)};
}

double occupation_from_amplitude(const OscillatorConfig& cfg, std::complex<double> d) {
  return cfg.mass * cfg.omega * std::norm(d) / (2.0 * cfg.cs.hbar());
}

FockWeights fock_weights(double nbar, double tol) {
  if (nbar < 0.0 || !std::isfinite(nbar)) {
    throw std::domain_error("fock_weights: nbar must be finite and >= 0");
  }
  if (!(tol > 0.0) || !(tol < 1.0)) {
    throw std::domain_error("fock_weights: tol must lie in (0, 1)");
  }
  if (nbar == 0.0) {
    return FockWeights{0.0, {1.0}};
  }

  const int n_rule = truncation_rule(nbar);
  const int n_hard_cap = n_rule + 10000;
  // Extension threshold: keep going past the rule while terms are still
  // large enough to matter against tol.
  const double cutoff = tol * std::numeric_limits<double>::epsilon();

  std::vector<double> weights;
  weights.reserve(static_cast<std::size_t>(n_rule) + 16);

  if (nbar <= kLogSpaceThreshold) {
    double w = std::exp(-nbar);
    weights.push_back(w);
    for (int n = 0; n < n_hard_cap; ++n) {
      w *= nbar / static_cast<double>(n + 1);
      weights.push_back(w);
      if (n + 1 >= n_rule && w < cutoff) break;
    }
  } else {
    const double log_nbar = std::log(nbar);
    // Compensated accumulation of ln w_n; the running value cancels from
    // -nbar down to O(1) near the mode, so plain adds would lose digits.
    double lw = -nbar;
    double comp = 0.0;
    weights.push_back(0.0);  // e^{-nbar} underflows for nbar > 700
    for (int n = 0; n < n_hard_cap; ++n) {
      const double term = log_nbar - std::log(static_cast<double>(n + 1));
      const double y = term - comp;
      const double t = lw + y;
      comp = (t - lw) - y;
      lw = t;
      const double w = std::exp(lw);
      weights.push_back(w);
      if (n + 1 >= n_rule && n + 1 > nbar && w < cutoff) break;
    }
  }

  return FockWeights{nbar, std::move(weights)};
}

double overlap_sq(const OscillatorConfig& cfg, std::complex<double> d,
                  std::complex<double> f) {
  const double sep_sq = std::norm(d - f);
  return std::exp(-cfg.mass * cfg.omega * sep_sq / (2.0 * cfg.cs.hbar()));
}

double log_partition_function(double nbar) {
  if (nbar < 0.0 || !std::isfinite(nbar)) {
    throw std::domain_error("log_partition_function: nbar must be finite and >= 0");
  }
  return nbar;
}

double mean_energy(const OscillatorConfig& cfg, double nbar) {
  if (nbar < 0.0 || !std::isfinite(nbar)) {
    throw std::domain_error("mean_energy: nbar must be finite and >= 0");
  }
  return cfg.cs.hbar() * cfg.omega * (nbar + 0.5);
}

}  // namespace cstherm
