#ifndef CSTHERM_BLACKHOLE_HPP
#define CSTHERM_BLACKHOLE_HPP

#include "cstherm/constants.hpp"

namespace cstherm {

// kg; the mass value used by the CLI's --solar-masses flag
inline constexpr double kSolarMassKg = 1.989e30;

// Patch-state count kappa is an integer >= 2 in API use; identity tests may
// relax it to any real > 1 (e.g. kappa = e).
enum class KappaValidation { IntegerStates, AnyRealAboveOne };

/*!
  Schwarzschild horizon parameters. Exactly one of mass/area is the source
  of truth; the other is derived from it at construction.
*/
struct BlackHoleConfig {
  double mass;   // kg
  double area;   // m^2
  double beta;   // dimensionless patch-size convention
  double kappa;  // states per patch
  ConstantsSet cs;

  static BlackHoleConfig from_mass(double M, double beta, double kappa, ConstantsSet cs);
  static BlackHoleConfig from_area(double A, double beta, double kappa, ConstantsSet cs);
};

// A = 16 pi G^2 M^2 / c^4; throws std::domain_error for M <= 0
double horizon_area(double M, const ConstantsSet& cs);

struct BhEntropy {
  double entropy;          // J/K
  double entropy_over_kB;  // dimensionless
};

// S = k_B A / (4 lambda_P^2), evaluated in log space; both the entropy and
// the dimensionless ratio are returned
BhEntropy bh_entropy(double A, const ConstantsSet& cs);

// ln Q for a horizon of equal-area patches, each of area alpha lambda_P^2
// carrying kappa states: ln Q = (A / (alpha lambda_P^2)) ln kappa. Always in
// log space; Q itself is astronomically large.
double bekenstein_log_states(double A, double kappa, double alpha, const ConstantsSet& cs,
                             KappaValidation validation = KappaValidation::IntegerStates);

// Microcanonical (Boltzmann) entropy S = k_B ln Q;
// throws std::domain_error for log_states < 0
double bekenstein_entropy(double log_states, const ConstantsSet& cs);

// alpha = beta ln kappa
double alpha_from_kappa(double beta, double kappa,
                        KappaValidation validation = KappaValidation::IntegerStates);

/*!
  Both entropy conventions side by side for one horizon. With
  nbar = A/(beta lambda_P^2):

    route 1 (Boltzmann, nbar independent of T):  S = k_B nbar,   closes at beta = 4
    route 2 (coherent state, nbar prop. to T):   S = 2 k_B nbar, closes at beta = 8

  The booleans record which route reproduces S = k_B A/(4 lambda_P^2) to
  relative 1e-12.
*/
struct EquivalenceReport {
  double nbar;
  double log_states;         // ln Q, equals nbar once alpha = beta ln kappa
  double entropy_boltzmann;  // J/K
  double entropy_coherent;   // J/K
  double entropy_target;     // J/K
  bool route1_matches;
  bool route2_matches;
};

EquivalenceReport coherent_equivalence_report(const BlackHoleConfig& cfg);

}  // namespace cstherm

#endif
