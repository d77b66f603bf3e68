#include "cstherm/blackhole.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cstherm {

namespace {

constexpr double kRouteTolerance = 1e-12;

void validate_kappa(double kappa, KappaValidation validation) {
  if (validation == KappaValidation::IntegerStates) {
    if (!(kappa >= 2.0) || kappa != std::floor(kappa) || !std::isfinite(kappa)) {
      throw std::domain_error("kappa must be an integer >= 2 (patches carry a whole "
                              "number of states)");
    }
  } else {
    if (!(kappa > 1.0) || !std::isfinite(kappa)) {
      throw std::domain_error("kappa must be > 1");
    }
  }
}

bool close_rel(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return true;
  return std::abs(a - b) <= kRouteTolerance * scale;
}

}  // namespace

BlackHoleConfig BlackHoleConfig::from_mass(double M, double beta, double kappa,
                                           ConstantsSet cs) {
  if (!(beta > 0.0)) throw std::domain_error("BlackHoleConfig: beta must be > 0");
  validate_kappa(kappa, KappaValidation::IntegerStates);
  const double A = horizon_area(M, cs);
  return BlackHoleConfig{M, A, beta, kappa, std::move(cs)};
}

BlackHoleConfig BlackHoleConfig::from_area(double A, double beta, double kappa,
                                           ConstantsSet cs) {
  if (!(A > 0.0) || !std::isfinite(A)) {
    throw std::domain_error("BlackHoleConfig: area must be finite and > 0");
  }
  if (!(beta > 0.0)) throw std::domain_error("BlackHoleConfig: beta must be > 0");
  validate_kappa(kappa, KappaValidation::IntegerStates);
  // invert A = 16 pi G^2 M^2 / c^4
  const double M =
      cs.c() * cs.c() * std::sqrt(A / (16.0 * std::numbers::pi)) / cs.G();
  return BlackHoleConfig{M, A, beta, kappa, std::move(cs)};
}

double horizon_area(double M, const ConstantsSet& cs) {
  if (!(M > 0.0) || !std::isfinite(M)) {
    throw std::domain_error("horizon_area: mass must be finite and > 0");
  }
  const double gm = cs.G() * M;
  const double c2 = cs.c() * cs.c();
  const double rs_like = gm / c2;  // GM/c^2, half the Schwarzschild radius
  return 16.0 * std::numbers::pi * rs_like * rs_like;
}

BhEntropy bh_entropy(double A, const ConstantsSet& cs) {
  if (!(A > 0.0) || !std::isfinite(A)) {
    throw std::domain_error("bh_entropy: area must be finite and > 0");
  }
  const double lp = planck_length(cs);
  // ratio = A / (4 lp^2), via logs; the ratio is ~1e77 already for a solar
  // mass and log space keeps every intermediate tame
  const double log_ratio = std::log(A) - std::log(4.0 * lp * lp);
  const double ratio = std::exp(log_ratio);
  return BhEntropy{cs.k_B() * ratio, ratio};
}

double bekenstein_log_states(double A, double kappa, double alpha, const ConstantsSet& cs,
                             KappaValidation validation) {
  if (!(A > 0.0) || !std::isfinite(A)) {
    throw std::domain_error("bekenstein_log_states: area must be finite and > 0");
  }
  if (!(alpha > 0.0)) {
    throw std::domain_error("bekenstein_log_states: alpha must be > 0");
  }
  validate_kappa(kappa, validation);
  const double lp = planck_length(cs);
  const double patches = A / (alpha * lp * lp);
  return patches * std::log(kappa);
}

double bekenstein_entropy(double log_states, const ConstantsSet& cs) {
  if (log_states < 0.0 || !std::isfinite(log_states)) {
    throw std::domain_error("bekenstein_entropy: log_states must be finite and >= 0");
  }
  return cs.k_B() * log_states;
}

double alpha_from_kappa(double beta, double kappa, KappaValidation validation) {
  if (!(beta > 0.0)) {
    throw std::domain_error("alpha_from_kappa: beta must be > 0");
  }
  validate_kappa(kappa, validation);
  return beta * std::log(kappa);
}

EquivalenceReport coherent_equivalence_report(const BlackHoleConfig& cfg) {
  const ConstantsSet& cs = cfg.cs;
  const double lp = planck_length(cs);
  const double nbar = cfg.area / (cfg.beta * lp * lp);

  // ln Q through the patch construction; with alpha = beta ln kappa the
  // kappa dependence cancels and ln Q = nbar
  const double alpha = alpha_from_kappa(cfg.beta, cfg.kappa);
  const double log_states = bekenstein_log_states(cfg.area, cfg.kappa, alpha, cs);

  const double target = bh_entropy(cfg.area, cs).entropy;
  const double route1 = bekenstein_entropy(log_states, cs);  // S = k_B nbar
  const double route2 = 2.0 * cs.k_B() * nbar;               // S = 2 k_B nbar

  return EquivalenceReport{nbar,   log_states,
                           route1, route2,
                           target, close_rel(route1, target),
                           close_rel(route2, target)};
}

}  // namespace cstherm
