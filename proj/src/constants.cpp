#include "cstherm/constants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cstherm {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::domain_error(std::string("constant ") + name + " must be finite and > 0");
  }
}

}  // namespace

ConstantsSet::ConstantsSet(double hbar, double k_B, double c, double G, UnitSystem units)
    : hbar_(hbar), k_B_(k_B), c_(c), G_(G), units_(units) {
  require_positive(hbar_, "hbar");
  require_positive(k_B_, "k_B");
  require_positive(c_, "c");
  require_positive(G_, "G");
}

ConstantsSet ConstantsSet::si() {
  return ConstantsSet(codata2018::hbar, codata2018::k_B, codata2018::c, codata2018::G,
                      UnitSystem::SI);
}

ConstantsSet ConstantsSet::natural(double G) {
  return ConstantsSet(1.0, 1.0, 1.0, G, UnitSystem::Natural);
}

ConstantsSet ConstantsSet::with(std::string_view name, double value) const {
  const bool natural = units_ == UnitSystem::Natural;
  if (name == "G") {
    return ConstantsSet(hbar_, k_B_, c_, value, units_);
  }
  if (name == "hbar" || name == "k_B" || name == "c") {
    if (natural) {
      throw std::domain_error("natural units fix " + std::string(name) +
                              " = 1; only G may be overridden");
    }
    if (name == "hbar") return ConstantsSet(value, k_B_, c_, G_, units_);
    if (name == "k_B") return ConstantsSet(hbar_, value, c_, G_, units_);
    return ConstantsSet(hbar_, k_B_, value, G_, units_);
  }
  throw std::domain_error("unknown constant '" + std::string(name) +
                          "' (expected hbar, k_B, c or G)");
}

std::string_view unit_system_name(UnitSystem u) {
  return u == UnitSystem::SI ? "si" : "natural";
}

double planck_length(const ConstantsSet& cs) {
  return std::sqrt(cs.hbar() * cs.G() / (cs.c() * cs.c() * cs.c()));
}

double compton_wavelength(const ConstantsSet& cs, double mass) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw std::domain_error("compton_wavelength: mass must be finite and > 0");
  }
  return cs.hbar() / (mass * cs.c());
}

}  // namespace cstherm
