#ifndef CSTHERM_VERIFICATION_HPP
#define CSTHERM_VERIFICATION_HPP

#include <functional>
#include <string>
#include <vector>

#include "cstherm/coherent.hpp"
#include "cstherm/kgf_field.hpp"

namespace cstherm {

// One primary-vs-oracle comparison. passed <=> relative_error <= tolerance,
// with |a - b| <= tolerance as the fallback when the oracle value is zero.
struct OracleReport {
  std::string quantity;
  double primary_value;
  double oracle_value;
  double relative_error;
  double tolerance;
  bool passed;
};

OracleReport make_oracle_report(std::string quantity, double primary_value,
                                double oracle_value, double tolerance);

enum class FockObservable { Norm, MeanN, VarN, Energy };

/*!
  Brute-force truncated Fock sum sum_n rho_nn f(n) with f = 1, n,
  (n - nbar)^2 or hbar omega (n + 1/2).

  Independent of the primary path: each weight is evaluated directly from
  exp(-nbar + n ln nbar - lgamma(n+1)) (no recurrence) and the series is
  accumulated with compensated summation, truncated with tail mass below
  1e-14. Scale bound nbar <= 1e4; beyond it an OracleScaleError is thrown
  rather than silently truncating.
*/
double fock_sum_oracle(const OscillatorConfig& cfg, double nbar, FockObservable observable);

/*!
  Double integral over (r', theta) of the screened kernel for a UniformBall
  source, with no angular symmetry reduction, by nested adaptive Simpson
  quadrature at relative 1e-8. Checks the closed-form angular reduction used
  by yukawa_potential. Requires a UniformBall profile and r > radius_d.
*/
double nested_quadrature_oracle(const SphericalSource& src, double r);

// Central difference with one Richardson extrapolation level against the
// claimed analytic derivative. Failure is a report, not an exception.
OracleReport finite_difference_check(const std::function<double(double)>& f, double x,
                                     double analytic_df, double tolerance = 1e-6);

// The full machine-readable oracle suite behind `cstherm --self-check`.
std::vector<OracleReport> self_check_suite();

}  // namespace cstherm

#endif
