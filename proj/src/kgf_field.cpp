#include "cstherm/kgf_field.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <stdexcept>

#include "cstherm/errors.hpp"
#include "cstherm/quadrature.hpp"

namespace cstherm {

namespace {

std::string trimmed(std::string s) {
  const char* ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

double parse_number(const std::string& token, std::size_t row, const char* column) {
  const std::string t = trimmed(token);
  if (t.empty()) {
    throw CsvParseError(row, std::string("empty ") + column + " field");
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size()) {
    throw CsvParseError(row, std::string("cannot parse ") + column + " value '" + t + "'");
  }
  if (std::isnan(value)) {
    throw CsvParseError(row, std::string(column) + " is NaN");
  }
  return value;
}

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

ModeSpectrum::ModeSpectrum(std::vector<Mode> modes) : modes_(std::move(modes)) {
  double total = 0.0;
  for (const Mode& m : modes_) {
    if (!(m.omega > 0.0) || !std::isfinite(m.omega)) {
      throw std::domain_error("ModeSpectrum: every omega must be finite and > 0");
    }
    if (m.nbar < 0.0 || !std::isfinite(m.nbar)) {
      throw std::domain_error("ModeSpectrum: every nbar must be finite and >= 0");
    }
    total += m.nbar;  // fixed input order
  }
  nbar_total_ = total;
}

ModeSpectrum ModeSpectrum::from_csv(std::istream& in) {
  std::string line;
  std::size_t row = 0;

  if (!std::getline(in, line)) {
    throw CsvParseError(1, "missing header 'omega,nbar'");
  }
  ++row;
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
    line.erase(0, 3);  // UTF-8 BOM
  }
  const auto comma = line.find(',');
  if (comma == std::string::npos || trimmed(line.substr(0, comma)) != "omega" ||
      trimmed(line.substr(comma + 1)) != "nbar") {
    throw CsvParseError(1, "header must be 'omega,nbar', got '" + trimmed(line) + "'");
  }

  std::vector<Mode> modes;
  while (std::getline(in, line)) {
    ++row;
    if (trimmed(line).empty()) continue;
    const auto sep = line.find(',');
    if (sep == std::string::npos) {
      throw CsvParseError(row, "expected two comma-separated fields");
    }
    if (line.find(',', sep + 1) != std::string::npos) {
      throw CsvParseError(row, "expected exactly two fields");
    }
    const double omega = parse_number(line.substr(0, sep), row, "omega");
    const double nbar = parse_number(line.substr(sep + 1), row, "nbar");
    if (!(omega > 0.0) || !std::isfinite(omega)) {
      throw CsvParseError(row, "omega must be finite and > 0, got " + short_num(omega));
    }
    if (nbar < 0.0 || !std::isfinite(nbar)) {
      throw CsvParseError(row, "nbar must be finite and >= 0, got " + short_num(nbar));
    }
    modes.push_back({omega, nbar});
  }
  return ModeSpectrum(std::move(modes));
}

ModeSpectrum ModeSpectrum::from_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open spectrum file '" + path + "'");
  }
  return from_csv(in);
}

SphericalSource::SphericalSource(double g_, double radius_d_, double lambda_C_,
                                 SourceProfile profile_)
    : g(g_), radius_d(radius_d_), lambda_C(lambda_C_), profile(profile_) {
  if (!(lambda_C > 0.0) || !std::isfinite(lambda_C)) {
    throw std::domain_error("SphericalSource: lambda_C must be finite and > 0");
  }
  if (radius_d < 0.0 || !std::isfinite(radius_d)) {
    throw std::domain_error("SphericalSource: radius_d must be finite and >= 0");
  }
  if (profile == SourceProfile::UniformBall && !(radius_d > 0.0)) {
    throw std::domain_error("SphericalSource: UniformBall requires radius_d > 0");
  }
}

double mean_frequency(const ModeSpectrum& spec) {
  if (!(spec.nbar_total() > 0.0)) {
    throw std::domain_error(
        "mean_frequency: undefined for all-zero occupations");
  }
  double weighted = 0.0;
  for (const Mode& m : spec.modes()) {
    weighted += m.omega * m.nbar;
  }
  return weighted / spec.nbar_total();
}

double field_energy(const ModeSpectrum& spec, const ConstantsSet& cs) {
  const double wbar = mean_frequency(spec);
  // single collective zero-point term (1/2) hbar wbar, not a per-mode sum
  return cs.hbar() * wbar * (spec.nbar_total() + 0.5);
}

Warned<double> field_temperature(const ModeSpectrum& spec, const ConstantsSet& cs,
                                 double validity_threshold) {
  const double wbar = mean_frequency(spec);
  Warned<double> out{cs.hbar() * wbar / cs.k_B(), {}};
  if (spec.nbar_total() < validity_threshold) {
    out.warnings.push_back("nbar_total = " + short_num(spec.nbar_total()) +
                           " is below the validity threshold " +
                           short_num(validity_threshold) +
                           "; T = hbar*wbar/k_B assumes nbar >> 1/2");
  }
  return out;
}

double field_entropy(const ModeSpectrum& spec, const ConstantsSet& cs) {
  return 2.0 * cs.k_B() * spec.nbar_total();
}

double yukawa_potential(const SphericalSource& src, double r, double quad_tol) {
  if (!(quad_tol > 1e-12) || !(quad_tol < 1e-3)) {
    throw std::domain_error("yukawa_potential: quad_tol must lie in (1e-12, 1e-3)");
  }
  if (!(r > src.radius_d)) {
    throw std::domain_error("yukawa_potential: r must exceed the source radius");
  }

  const double lambda = src.lambda_C;
  if (src.profile == SourceProfile::PointLike) {
    return src.g * std::exp(-r / lambda) / r;
  }

  // Angular average of the screened kernel for r > r':
  //   integral dOmega e^{-|r-r'|/lambda}/|r-r'| = 4 pi lambda sinh(r'/lambda)
  //                                               e^{-r/lambda} / (r r'),
  // which reduces the volume integral to one radial quadrature. The
  // exponentials are folded together so nothing overflows when lambda << a.
  const double a = src.radius_d;
  const auto radial = [r, lambda](double rp) {
    return rp * 0.5 *
           (std::exp((rp - r) / lambda) - std::exp(-(rp + r) / lambda));
  };
  const QuadratureResult q = adaptive_gauss_kronrod(radial, 0.0, a, quad_tol);
  return src.g * 3.0 * lambda / (a * a * a * r) * q.value;
}

Warned<double> occupancy_estimate(double radius_d, double lambda_C, double prefactor) {
  if (!(radius_d > 0.0) || !(lambda_C > 0.0)) {
    throw std::domain_error("occupancy_estimate: lengths must be > 0");
  }
  if (!(prefactor > 0.0)) {
    throw std::domain_error("occupancy_estimate: prefactor must be > 0");
  }
  const double area = 4.0 * std::numbers::pi * radius_d * radius_d;
  Warned<double> out{prefactor * area / (lambda_C * lambda_C), {}};
  if (radius_d < 5.0 * lambda_C) {
    out.warnings.push_back("radius_d = " + short_num(radius_d) + " < 5*lambda_C = " +
                           short_num(5.0 * lambda_C) +
                           "; the layer estimate assumes radius_d >> lambda_C");
  }
  return out;
}

Warned<double> field_entropy_area(double radius_d, double lambda_C, double prefactor,
                                  const ConstantsSet& cs) {
  Warned<double> occ = occupancy_estimate(radius_d, lambda_C, prefactor);
  Warned<double> out{2.0 * cs.k_B() * occ.value, std::move(occ.warnings)};
  out.warnings.push_back("order-of-magnitude estimate; prefactor = " +
                         short_num(prefactor) + " is a modeling choice");
  return out;
}

}  // namespace cstherm
