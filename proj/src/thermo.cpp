#include "cstherm/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cstherm/ode.hpp"

namespace cstherm {

namespace {

bool close_rel(double a, double b, double rtol) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale == 0.0) return true;
  return std::abs(a - b) <= rtol * scale;
}

// coth(x) for x > 0: 1 + 2/(e^{2x} - 1). expm1 keeps the 1/x pole accurate
// for small x and saturates cleanly to 1 for large x.
double coth_positive(double x) {
  return 1.0 + 2.0 / std::expm1(2.0 * x);
}

}  // namespace

bool thermo_point_consistent(const ThermoPoint& p, const ConstantsSet& cs, double rtol) {
  return close_rel(p.F, -cs.k_B() * p.T * p.lnQ, rtol) &&
         close_rel(p.E, p.F + p.T * p.S, rtol);
}

OccupationModel OccupationModel::linear(double gamma) {
  if (!(gamma >= 0.0)) {
    throw std::domain_error("OccupationModel::linear: gamma must be >= 0");
  }
  OccupationModel model;
  model.nbar_of_T = [gamma](double T) { return gamma * T; };
  model.description = "linear";
  return model;
}

double free_energy(double T, double lnQ, const ConstantsSet& cs) {
  if (!(T > 0.0)) {
    throw std::domain_error("free_energy: temperature must be > 0");
  }
  return -cs.k_B() * T * lnQ;
}

double entropy_numeric(const OccupationModel& model, double T, const ConstantsSet& cs) {
  if (!model.nbar_of_T) {
    throw std::domain_error("entropy_numeric: model has no nbar_of_T");
  }
  const double h = std::max(1e-6 * T, 1e-12);
  if (!(T - h > model.T_min) || !(T + h < model.T_max)) {
    throw std::domain_error(
        "entropy_numeric: derivative step leaves the model temperature domain");
  }

  const auto F = [&](double t) { return -cs.k_B() * t * model.nbar_of_T(t); };
  const auto central = [&](double step) {
    return (F(T + step) - F(T - step)) / (2.0 * step);
  };
  // one Richardson level on the central difference
  const double d_h = central(h);
  const double d_h2 = central(0.5 * h);
  const double dF_dT = (4.0 * d_h2 - d_h) / 3.0;
  return -dF_dT;
}

double entropy_analytic(double nbar, double T_dnbar_dT, const ConstantsSet& cs) {
  if (nbar < 0.0) {
    throw std::domain_error("entropy_analytic: nbar must be >= 0");
  }
  return cs.k_B() * (nbar + T_dnbar_dT);
}

double energy_from_occupation_slope(double T, double dnbar_dT, const ConstantsSet& cs) {
  if (!(T > 0.0)) {
    throw std::domain_error("energy_from_occupation_slope: temperature must be > 0");
  }
  return cs.k_B() * T * T * dnbar_dT;
}

double self_consistency_residual(const OscillatorConfig& cfg, double nbar, double T,
                                 double dnbar_dT) {
  return cfg.cs.hbar() * cfg.omega * (nbar + 0.5) - cfg.cs.k_B() * T * T * dnbar_dT;
}

double temperature_closed_form(const OscillatorConfig& cfg, double nbar) {
  if (!(nbar > 0.0)) {
    throw std::domain_error(
        "temperature_closed_form: nbar must be > 0 (nbar = 0 is the zero-point branch)");
  }
  const double log_term = std::log1p(1.0 / (2.0 * nbar));
  return cfg.cs.hbar() * cfg.omega / (2.0 * cfg.cs.k_B() * nbar * log_term);
}

std::vector<OccupationTemperatureSample> temperature_ode_solve(
    double alpha, double nbar_start, double nbar_end, double T_start, double rtol,
    const ConstantsSet& cs) {
  if (!(alpha > 0.0)) {
    throw std::domain_error("temperature_ode_solve: alpha must be > 0");
  }
  if (!(nbar_start > 0.0) || !(nbar_end > 0.0)) {
    throw std::domain_error(
        "temperature_ode_solve: the equation is singular at nbar = 0; "
        "occupations must be > 0");
  }
  if (nbar_start == nbar_end) {
    throw std::domain_error("temperature_ode_solve: empty integration range");
  }
  if (!(T_start > 0.0)) {
    throw std::domain_error("temperature_ode_solve: T_start must be > 0");
  }
  if (!(rtol > 1e-12) || !(rtol < 1e-3)) {
    throw std::domain_error("temperature_ode_solve: rtol must lie in (1e-12, 1e-3)");
  }

  const double hbar = cs.hbar();
  const double k_B = cs.k_B();
  const auto rhs = [alpha, hbar, k_B](double nbar, double T) {
    return k_B * T * T / (hbar * alpha * nbar * (nbar + 0.5));
  };

  OdeOptions opts;
  opts.rtol = rtol;
  OdeSolution sol = integrate_scalar_ivp(rhs, nbar_start, nbar_end, T_start, opts);

  // Dense output: merge the accepted nodes with a uniform grid filled by the
  // cubic interpolant.
  constexpr int kGridPoints = 257;
  std::vector<double> nodes = sol.x();
  nodes.reserve(nodes.size() + kGridPoints);
  for (int i = 0; i < kGridPoints; ++i) {
    const double t = static_cast<double>(i) / (kGridPoints - 1);
    nodes.push_back(nbar_start + t * (nbar_end - nbar_start));
  }
  const bool forward = nbar_end > nbar_start;
  std::sort(nodes.begin(), nodes.end());
  if (!forward) std::reverse(nodes.begin(), nodes.end());
  const double dedupe_eps = 1e-12 * std::abs(nbar_end - nbar_start);
  nodes.erase(std::unique(nodes.begin(), nodes.end(),
                          [dedupe_eps](double a, double b) {
                            return std::abs(a - b) <= dedupe_eps;
                          }),
              nodes.end());

  std::vector<OccupationTemperatureSample> samples;
  samples.reserve(nodes.size());
  for (double n : nodes) {
    samples.push_back({n, sol.sample(n)});
  }
  return samples;
}

AreaLaw area_law(const OscillatorConfig& cfg, double d_abs) {
  const double area = std::numbers::pi * d_abs * d_abs;
  const double l0 = std::sqrt(cfg.cs.hbar() / (cfg.mass * cfg.omega));
  const double nbar = area / (2.0 * std::numbers::pi * l0 * l0);
  const double entropy = cfg.cs.k_B() * area / (std::numbers::pi * l0 * l0);
  return AreaLaw{area, l0, nbar, entropy};
}

double bloch_temperature(const OscillatorConfig& cfg, double T_hb) {
  if (!(T_hb > 0.0)) {
    throw std::domain_error("bloch_temperature: heat-bath temperature must be > 0");
  }
  const double T0 = cfg.cs.hbar() * cfg.omega / (2.0 * cfg.cs.k_B());
  return T0 * coth_positive(T0 / T_hb);
}

double bloch_distribution(const OscillatorConfig& cfg, double T_hb, double q) {
  const double T_bl = bloch_temperature(cfg, T_hb);
  const double m_w2 = cfg.mass * cfg.omega * cfg.omega;
  const double kT = cfg.cs.k_B() * T_bl;
  return std::sqrt(m_w2 / (2.0 * std::numbers::pi * kT)) *
         std::exp(-m_w2 * q * q / (2.0 * kT));
}

ThermoPoint zero_point(const OscillatorConfig& cfg) {
  const double hw = cfg.cs.hbar() * cfg.omega;
  ThermoPoint p;
  p.T = hw / (2.0 * cfg.cs.k_B());
  p.lnQ = 0.0;
  p.F = 0.0;
  p.S = cfg.cs.k_B();
  p.E = 0.5 * hw;
  return p;
}

}  // namespace cstherm
