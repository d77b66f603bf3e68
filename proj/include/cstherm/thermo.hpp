#ifndef CSTHERM_THERMO_HPP
#define CSTHERM_THERMO_HPP

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "cstherm/coherent.hpp"
#include "cstherm/constants.hpp"

namespace cstherm {

// Bundled (T, lnQ, F, S, E). Producers keep F = -k_B T lnQ and E = F + T S;
// thermo_point_consistent checks both closure relations.
struct ThermoPoint {
  double T;    // K
  double lnQ;  // dimensionless
  double F;    // J
  double S;    // J/K
  double E;    // J
};

bool thermo_point_consistent(const ThermoPoint& p, const ConstantsSet& cs,
                             double rtol = 1e-12);

/*!
  Caller-supplied occupation-vs-temperature dependence nbar(T).

  The formulas S = k_B(nbar + T dnbar/dT) and E = k_B T^2 dnbar/dT need the
  temperature dependence of nbar, which is a modeling choice; the default
  choice is linear, nbar = gamma T. The declared (T_min, T_max) domain is
  open; numeric differentiation refuses points whose stencil would leave it.
*/
struct OccupationModel {
  std::function<double(double)> nbar_of_T;
  std::string description;
  double T_min = 0.0;
  double T_max = std::numeric_limits<double>::infinity();

  static OccupationModel linear(double gamma);
};

// F = -k_B T lnQ; throws std::domain_error for T <= 0
double free_energy(double T, double lnQ, const ConstantsSet& cs);

// S = -dF/dT with F(T) = -k_B T nbar(T), central difference of step
// h = max(1e-6 T, 1e-12) plus one Richardson level. Throws
// std::domain_error when the stencil leaves the model domain.
double entropy_numeric(const OccupationModel& model, double T, const ConstantsSet& cs);

// S = k_B (nbar + T dnbar/dT); the caller supplies T dnbar/dT from its model
double entropy_analytic(double nbar, double T_dnbar_dT, const ConstantsSet& cs);

// E = k_B T^2 dnbar/dT; throws std::domain_error for T <= 0
double energy_from_occupation_slope(double T, double dnbar_dT, const ConstantsSet& cs);

// hbar omega (nbar + 1/2) - k_B T^2 dnbar/dT; zero exactly when (nbar, T)
// satisfy the self-consistent effective-temperature condition
double self_consistency_residual(const OscillatorConfig& cfg, double nbar,
                                 double T, double dnbar_dT);

// T = hbar omega / (2 k_B nbar ln(1 + 1/(2 nbar))), evaluated with log1p so
// the nbar >> 1 limit does not cancel. Throws std::domain_error for
// nbar <= 0 (the zero-point branch is separate, see zero_point).
double temperature_closed_form(const OscillatorConfig& cfg, double nbar);

struct OccupationTemperatureSample {
  double nbar;
  double temperature;
};

/*!
  Integrates the effective-temperature equation

      dT/dnbar = k_B T^2 / (hbar alpha nbar (nbar + 1/2)),

  where alpha ties frequency to occupation (omega = alpha nbar), from
  nbar_start to nbar_end with an adaptive embedded Runge-Kutta pair at
  relative tolerance rtol. Returns dense (nbar, T) samples: the accepted
  steps merged with a uniform grid filled in by cubic interpolation.

  The right-hand side diverges at nbar = 0, so nbar_start, nbar_end > 0 is
  required (std::domain_error). rtol must lie in (1e-12, 1e-3).
  Step-size underflow surfaces as ConvergenceError.
*/
std::vector<OccupationTemperatureSample> temperature_ode_solve(
    double alpha, double nbar_start, double nbar_end, double T_start,
    double rtol, const ConstantsSet& cs);

// Phase-portrait area A_d = pi |d|^2, zero-point amplitude
// l0 = sqrt(hbar/(m omega)), nbar = A_d/(2 pi l0^2), S = k_B A_d/(pi l0^2).
struct AreaLaw {
  double area;     // m^2
  double l0;       // m
  double nbar;     // dimensionless
  double entropy;  // J/K
};

AreaLaw area_law(const OscillatorConfig& cfg, double d_abs);

// T_Bl = (hbar omega / 2 k_B) coth(hbar omega / (2 k_B T_hb)); coth is
// evaluated via expm1 and stays exact in both the T_hb -> 0 and classical
// limits. Throws std::domain_error for T_hb <= 0.
double bloch_temperature(const OscillatorConfig& cfg, double T_hb);

// Gaussian coordinate distribution at the Bloch temperature:
// b(q) = sqrt(m omega^2/(2 pi k_B T_Bl)) exp(-m omega^2 q^2/(2 k_B T_Bl))
double bloch_distribution(const OscillatorConfig& cfg, double T_hb, double q);

// The nbar = 0 branch: T = hbar omega/(2 k_B), E = hbar omega/2, F = 0,
// S = k_B, lnQ = 0.
ThermoPoint zero_point(const OscillatorConfig& cfg);

}  // namespace cstherm

#endif
