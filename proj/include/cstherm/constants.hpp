#ifndef CSTHERM_CONSTANTS_HPP
#define CSTHERM_CONSTANTS_HPP

#include <string_view>

namespace cstherm {

enum class UnitSystem { SI, Natural };

std::string_view unit_system_name(UnitSystem u);

// CODATA 2018 recommended values, SI.
namespace codata2018 {
inline constexpr double hbar = 1.054571817e-34;  // J s
inline constexpr double k_B = 1.380649e-23;      // J/K
inline constexpr double c = 299792458.0;         // m/s
inline constexpr double G = 6.67430e-11;         // m^3/(kg s^2)
}  // namespace codata2018

/*!
  Physical constants under a selected unit system.

  Immutable after construction; every instance satisfies hbar, k_B, c, G > 0,
  and in Natural mode hbar = k_B = c = 1 exactly. Overriding a constant
  produces a new validated set, so a ConstantsSet can be shared freely.
*/
class ConstantsSet {
 public:
  static ConstantsSet si();
  static ConstantsSet natural(double G = 1.0);

  // Returns a copy with one constant replaced. Valid names: hbar, k_B, c, G
  // (in Natural mode only G may change). Throws std::domain_error otherwise.
  ConstantsSet with(std::string_view name, double value) const;

  double hbar() const { return hbar_; }
  double k_B() const { return k_B_; }
  double c() const { return c_; }
  double G() const { return G_; }
  UnitSystem unit_system() const { return units_; }

 private:
  ConstantsSet(double hbar, double k_B, double c, double G, UnitSystem units);

  double hbar_;
  double k_B_;
  double c_;
  double G_;
  UnitSystem units_;
};

// sqrt(hbar G / c^3)
double planck_length(const ConstantsSet& cs);

// hbar / (m c); throws std::domain_error for m <= 0
double compton_wavelength(const ConstantsSet& cs, double mass);

}  // namespace cstherm

#endif
