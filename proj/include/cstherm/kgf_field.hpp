#ifndef CSTHERM_KGF_FIELD_HPP
#define CSTHERM_KGF_FIELD_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "cstherm/constants.hpp"

namespace cstherm {

// A value plus any validity notes attached on the way (regime violations,
// order-of-magnitude caveats). Warnings are data, not log text.
template <typename T>
struct Warned {
  T value;
  std::vector<std::string> warnings;
};

struct Mode {
  double omega;  // rad/s, > 0
  double nbar;   // dimensionless, >= 0
};

/*!
  Finite list of field modes (omega_i, nbar_i). nbar_total caches the sum of
  the occupations, accumulated in input order. An empty spectrum is legal
  (entropy 0) but has no mean frequency.
*/
class ModeSpectrum {
 public:
  explicit ModeSpectrum(std::vector<Mode> modes);

  // CSV with header "omega,nbar", one mode per row, '.' decimal separator.
  // Rejects NaN, non-positive omega, negative nbar, and malformed rows with
  // CsvParseError naming the row.
  static ModeSpectrum from_csv(std::istream& in);
  static ModeSpectrum from_csv_file(const std::string& path);

  const std::vector<Mode>& modes() const { return modes_; }
  double nbar_total() const { return nbar_total_; }

 private:
  std::vector<Mode> modes_;
  double nbar_total_;
};

enum class SourceProfile { UniformBall, PointLike };

// Static spherical source: coupling g, radius d, screening length lambda_C.
// The UniformBall density is normalized to unit total charge. Throws
// std::domain_error on invalid geometry.
struct SphericalSource {
  double g;
  double radius_d;  // m, >= 0 (0 only for PointLike)
  double lambda_C;  // m, > 0
  SourceProfile profile;

  SphericalSource(double g, double radius_d, double lambda_C, SourceProfile profile);
};

// Occupation-weighted mean frequency sum(omega_i nbar_i)/sum(nbar_i);
// throws std::domain_error when every occupation is zero
double mean_frequency(const ModeSpectrum& spec);

// E = hbar wbar (nbar_total + 1/2) with a single collective zero-point term
double field_energy(const ModeSpectrum& spec, const ConstantsSet& cs);

// T = hbar wbar / k_B, valid for nbar >> 1/2; a warning is attached below
// the validity threshold (default 10)
Warned<double> field_temperature(const ModeSpectrum& spec, const ConstantsSet& cs,
                                 double validity_threshold = 10.0);

// S = 2 k_B nbar_total
double field_entropy(const ModeSpectrum& spec, const ConstantsSet& cs);

/*!
  Screened (Yukawa) potential of the source at radius r > radius_d.

  PointLike evaluates g e^{-r/lambda_C}/r in closed form. UniformBall
  reduces the volume integral to a radial one by the closed-form angular
  average of the Yukawa kernel and evaluates it by adaptive Gauss-Kronrod
  quadrature to relative quad_tol.

  Throws std::domain_error for r <= radius_d or quad_tol outside
  (1e-12, 1e-3); ConvergenceError if the quadrature cannot reach quad_tol.
*/
double yukawa_potential(const SphericalSource& src, double r, double quad_tol = 1e-8);

// nbar ~ prefactor * 4 pi radius_d^2 / lambda_C^2. Order-of-magnitude layer
// count; warns when radius_d < 5 lambda_C (outside the d >> lambda_C
// regime). Throws std::domain_error on nonpositive lengths or prefactor.
Warned<double> occupancy_estimate(double radius_d, double lambda_C, double prefactor);

// S ~ 2 k_B * occupancy_estimate; carries the estimate's prefactor
// ambiguity as an explicit warning
Warned<double> field_entropy_area(double radius_d, double lambda_C, double prefactor,
                                  const ConstantsSet& cs);

}  // namespace cstherm

#endif
