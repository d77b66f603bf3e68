#include "cstherm/cli.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include "cstherm/blackhole.hpp"
#include "cstherm/coherent.hpp"
#include "cstherm/thermo.hpp"

namespace cstherm {

namespace {

struct UnitStrings {
  std::string temperature;
  std::string energy;
  std::string entropy;  // entropies are always reported in units of k_B
  std::string length;
  std::string area;
  std::string frequency;
  std::string density;  // 1/length
};

UnitStrings units_for(UnitSystem u) {
  if (u == UnitSystem::SI) {
    return {"K", "J", "k_B", "m", "m^2", "rad/s", "1/m"};
  }
  return {"natural", "natural", "k_B", "natural", "natural", "natural", "natural"};
}

void echo_common(OutputRecord& rec, const CommonOptions& common) {
  rec.add_input("units", std::string(unit_system_name(common.units)));
  for (const auto& [name, value] : common.const_overrides) {
    rec.add_input("const." + name, value);
  }
}

double sweep_point(double from, double to, int points, bool log_scale, int i) {
  if (i == 0) return from;
  if (i == points - 1) return to;
  const double t = static_cast<double>(i) / (points - 1);
  if (log_scale) {
    return std::exp(std::log(from) + t * (std::log(to) - std::log(from)));
  }
  return from + t * (to - from);
}

}  // namespace

ConstantsSet CommonOptions::constants() const {
  ConstantsSet cs =
      units == UnitSystem::SI ? ConstantsSet::si() : ConstantsSet::natural();
  for (const auto& [name, value] : const_overrides) {
    cs = cs.with(name, value);
  }
  return cs;
}

OutputRecord run_oscillator(const OscillatorOptions& opt) {
  const ConstantsSet cs = opt.common.constants();
  const UnitStrings u = units_for(opt.common.units);
  const OscillatorConfig cfg(opt.mass, opt.omega, cs);

  const bool have_d = opt.d_re.has_value() || opt.d_im.has_value();
  if (have_d && opt.nbar.has_value()) {
    throw std::domain_error("give either --nbar or --d-re/--d-im, not both");
  }
  if (!have_d && !opt.nbar.has_value()) {
    throw std::domain_error("one of --nbar or --d-re/--d-im is required");
  }

  double nbar;
  double d_abs;
  std::optional<std::complex<double>> d;
  if (have_d) {
    d = std::complex<double>(opt.d_re.value_or(0.0), opt.d_im.value_or(0.0));
    nbar = occupation_from_amplitude(cfg, *d);
    d_abs = std::abs(*d);
  } else {
    nbar = *opt.nbar;
    if (nbar < 0.0 || !std::isfinite(nbar)) {
      throw std::domain_error("--nbar must be finite and >= 0");
    }
    // |d| implied by the occupation
    d_abs = std::sqrt(2.0 * cs.hbar() * nbar / (cfg.mass * cfg.omega));
  }

  OutputRecord rec;
  rec.command = "oscillator";
  echo_common(rec, opt.common);
  rec.add_input("mass", opt.mass);
  rec.add_input("omega", opt.omega);
  if (d) {
    rec.add_input("d_re", d->real());
    rec.add_input("d_im", d->imag());
  }
  rec.add_input("nbar", nbar);
  rec.add_input("occupation_model", std::string("linear"));

  const AreaLaw area = area_law(cfg, d_abs);

  if (nbar == 0.0) {
    const ThermoPoint zp = zero_point(cfg);
    rec.add_result("branch", std::string("zero-point"));
    rec.add_result("nbar", 0.0, "1");
    rec.add_result("ln_Q", zp.lnQ, "1");
    rec.add_result("T", zp.T, u.temperature);
    rec.add_result("F", zp.F, u.energy);
    rec.add_result("S_over_kB", zp.S / cs.k_B(), u.entropy);
    rec.add_result("E", zp.E, u.energy);
  } else {
    const double T = temperature_closed_form(cfg, nbar);
    const double lnQ = log_partition_function(nbar);
    rec.add_result("branch", std::string("coherent"));
    rec.add_result("nbar", nbar, "1");
    rec.add_result("ln_Q", lnQ, "1");
    rec.add_result("T", T, u.temperature);
    rec.add_result("F", free_energy(T, lnQ, cs), u.energy);
    rec.add_result("S_over_kB", 2.0 * nbar, u.entropy);
    rec.add_result("E", mean_energy(cfg, nbar), u.energy);
    if (nbar < 0.5) {
      rec.add_warning(
          "nbar < 1/2: the effective-temperature branch does not join the "
          "zero-point branch continuously");
    }
  }
  rec.add_result("A_d", area.area, u.area);
  rec.add_result("l0", area.l0, u.length);
  return rec;
}

std::vector<OutputRecord> run_bloch(const BlochOptions& opt) {
  const ConstantsSet cs = opt.common.constants();
  const UnitStrings u = units_for(opt.common.units);
  const OscillatorConfig cfg(opt.mass, opt.omega, cs);
  if (!(opt.t_hb > 0.0)) {
    throw std::domain_error("--t-hb must be > 0");
  }

  const bool have_grid =
      opt.q_from.has_value() || opt.q_to.has_value() || opt.q_points > 0;
  if (have_grid &&
      (!opt.q_from.has_value() || !opt.q_to.has_value() || opt.q_points < 2)) {
    throw std::domain_error("a q-grid needs --q-from, --q-to and --q-points >= 2");
  }

  const double t_bl = bloch_temperature(cfg, opt.t_hb);

  std::vector<OutputRecord> records;
  OutputRecord rec;
  rec.command = "bloch";
  echo_common(rec, opt.common);
  rec.add_input("mass", opt.mass);
  rec.add_input("omega", opt.omega);
  rec.add_input("t_hb", opt.t_hb);
  rec.add_result("T_Bl", t_bl, u.temperature);
  records.push_back(std::move(rec));

  if (have_grid) {
    for (int i = 0; i < opt.q_points; ++i) {
      const double q = sweep_point(*opt.q_from, *opt.q_to, opt.q_points, false, i);
      OutputRecord row;
      row.command = "bloch-distribution";
      echo_common(row, opt.common);
      row.add_input("mass", opt.mass);
      row.add_input("omega", opt.omega);
      row.add_input("t_hb", opt.t_hb);
      row.add_input("q", q);
      row.add_result("b", bloch_distribution(cfg, opt.t_hb, q), u.density);
      records.push_back(std::move(row));
    }
  }
  return records;
}

OutputRecord run_field(const FieldOptions& opt) {
  const ConstantsSet cs = opt.common.constants();
  const UnitStrings u = units_for(opt.common.units);

  const bool estimate_path = opt.radius.has_value() && opt.compton.has_value();
  if (!opt.spectrum_path && !estimate_path && !opt.potential_at) {
    throw std::domain_error(
        "nothing to compute: give --spectrum, or --radius with --compton, or "
        "--potential-at");
  }
  if (opt.potential_at && !opt.compton) {
    throw std::domain_error("--potential-at needs --compton (the screening length)");
  }

  OutputRecord rec;
  rec.command = "field";
  echo_common(rec, opt.common);
  if (opt.spectrum_path) rec.add_input("spectrum", *opt.spectrum_path);
  if (opt.radius) rec.add_input("radius", *opt.radius);
  if (opt.compton) rec.add_input("compton", *opt.compton);
  if (estimate_path) rec.add_input("prefactor", opt.prefactor);
  if (opt.potential_at) {
    rec.add_input("coupling", opt.coupling);
    rec.add_input("profile", std::string(opt.profile == SourceProfile::UniformBall
                                             ? "ball"
                                             : "point"));
    rec.add_input("potential_at", *opt.potential_at);
    rec.add_input("quad_tol", opt.quad_tol);
  }

  if (opt.spectrum_path) {
    const ModeSpectrum spec = ModeSpectrum::from_csv_file(*opt.spectrum_path);
    const Warned<double> T = field_temperature(spec, cs, opt.temperature_validity_threshold);
    rec.add_result("nbar_total", spec.nbar_total(), "1");
    rec.add_result("mean_frequency", mean_frequency(spec), u.frequency);
    rec.add_result("E", field_energy(spec, cs), u.energy);
    rec.add_result("T", T.value, u.temperature);
    rec.add_result("S_over_kB", field_entropy(spec, cs) / cs.k_B(), u.entropy);
    for (const std::string& w : T.warnings) rec.add_warning(w);
  }

  if (estimate_path) {
    const Warned<double> occ = occupancy_estimate(*opt.radius, *opt.compton, opt.prefactor);
    const Warned<double> s_area =
        field_entropy_area(*opt.radius, *opt.compton, opt.prefactor, cs);
    rec.add_result("nbar_estimate", occ.value, "1");
    rec.add_result("S_area_over_kB", s_area.value / cs.k_B(), u.entropy);
    for (const std::string& w : s_area.warnings) rec.add_warning(w);
  }

  if (opt.potential_at) {
    const double radius_d = opt.radius.value_or(0.0);
    const SourceProfile profile =
        radius_d > 0.0 ? opt.profile : SourceProfile::PointLike;
    const SphericalSource src(opt.coupling, radius_d, *opt.compton, profile);
    const std::string unit =
        opt.common.units == UnitSystem::SI ? "g/m" : "natural";
    rec.add_result("phi", yukawa_potential(src, *opt.potential_at, opt.quad_tol), unit);
  }

  return rec;
}

OutputRecord run_blackhole(const BlackholeOptions& opt) {
  const ConstantsSet cs = opt.common.constants();
  const UnitStrings u = units_for(opt.common.units);

  if (opt.solar_masses.has_value() == opt.area.has_value()) {
    throw std::domain_error("give exactly one of --solar-masses or --area");
  }

  BlackHoleConfig cfg =
      opt.solar_masses
          ? BlackHoleConfig::from_mass(*opt.solar_masses * kSolarMassKg, opt.beta,
                                       opt.kappa, cs)
          : BlackHoleConfig::from_area(*opt.area, opt.beta, opt.kappa, cs);

  OutputRecord rec;
  rec.command = "blackhole";
  echo_common(rec, opt.common);
  if (opt.solar_masses) rec.add_input("solar_masses", *opt.solar_masses);
  if (opt.area) rec.add_input("area", *opt.area);
  rec.add_input("mass_kg", cfg.mass);
  rec.add_input("beta", opt.beta);
  rec.add_input("kappa", static_cast<double>(opt.kappa));

  const BhEntropy s_bh = bh_entropy(cfg.area, cs);
  const EquivalenceReport report = coherent_equivalence_report(cfg);

  // kappa cancels from ln Q once alpha = beta ln kappa; confirm numerically
  double max_rel_dev = 0.0;
  const double reference = report.log_states;
  for (double kappa : {2.0, 3.0, 10.0, 100.0}) {
    const double ln_q = bekenstein_log_states(
        cfg.area, kappa, alpha_from_kappa(opt.beta, kappa), cs);
    max_rel_dev = std::max(max_rel_dev,
                           std::abs(ln_q - reference) / std::abs(reference));
  }

  rec.add_result("A", cfg.area, u.area);
  rec.add_result("S_over_kB", s_bh.entropy_over_kB, u.entropy);
  rec.add_result("nbar", report.nbar, "1");
  rec.add_result("ln_Q", report.log_states, "1");
  rec.add_result("S_route1_over_kB", report.entropy_boltzmann / cs.k_B(), u.entropy);
  rec.add_result("S_route2_over_kB", report.entropy_coherent / cs.k_B(), u.entropy);
  rec.add_result("route1_matches", std::string(report.route1_matches ? "true" : "false"));
  rec.add_result("route2_matches", std::string(report.route2_matches ? "true" : "false"));
  rec.add_result("kappa_invariance_max_rel_dev", max_rel_dev, "1");
  rec.add_result("kappa_invariant",
                 std::string(max_rel_dev <= 1e-12 ? "true" : "false"));

  if (!report.route1_matches && !report.route2_matches) {
    rec.add_warning("beta matches neither the Boltzmann (beta=4) nor the "
                    "coherent-state (beta=8) route");
  }
  return rec;
}

std::vector<OutputRecord> run_sweep(const SweepOptions& opt) {
  if (opt.points < 2) {
    throw std::domain_error("--points must be >= 2");
  }
  if (!(opt.from < opt.to)) {
    throw std::domain_error("--from must be < --to");
  }
  if (opt.log_scale && !(opt.from > 0.0)) {
    throw std::domain_error("log scale needs --from > 0");
  }

  std::vector<OutputRecord> rows;
  rows.reserve(static_cast<std::size_t>(opt.points));
  for (int i = 0; i < opt.points; ++i) {
    const double value = sweep_point(opt.from, opt.to, opt.points, opt.log_scale, i);
    switch (opt.base) {
      case SweepBase::Oscillator: {
        OscillatorOptions o = opt.oscillator;
        if (opt.var == "nbar") {
          o.nbar = value;
          o.d_re.reset();
          o.d_im.reset();
        } else if (opt.var == "mass") {
          o.mass = value;
        } else {
          throw std::domain_error("--var '" + opt.var +
                                  "' does not apply to the oscillator base");
        }
        rows.push_back(run_oscillator(o));
        break;
      }
      case SweepBase::Bloch: {
        if (opt.var != "t-hb") {
          throw std::domain_error("--var '" + opt.var +
                                  "' does not apply to the bloch base");
        }
        BlochOptions o = opt.bloch;
        if (o.q_points > 0 || o.q_from || o.q_to) {
          throw std::domain_error("q-grids cannot be combined with sweep");
        }
        o.t_hb = value;
        std::vector<OutputRecord> recs = run_bloch(o);
        rows.push_back(std::move(recs.front()));
        break;
      }
      case SweepBase::Field: {
        if (opt.var != "radius") {
          throw std::domain_error("--var '" + opt.var +
                                  "' does not apply to the field base");
        }
        FieldOptions o = opt.field;
        o.radius = value;
        rows.push_back(run_field(o));
        break;
      }
      case SweepBase::Blackhole: {
        if (opt.var != "mass") {
          throw std::domain_error("--var '" + opt.var +
                                  "' does not apply to the blackhole base");
        }
        BlackholeOptions o = opt.blackhole;
        o.solar_masses = value;
        o.area.reset();
        rows.push_back(run_blackhole(o));
        break;
      }
    }
  }
  return rows;
}

std::string render_records(const std::vector<OutputRecord>& records, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Json:
      for (const OutputRecord& rec : records) os << to_json(rec) << '\n';
      break;
    case OutputFormat::Csv: {
      std::string last_header;
      for (const OutputRecord& rec : records) {
        const std::string header = csv_header(rec);
        if (header != last_header) {
          os << header << '\n';
          last_header = header;
        }
        os << to_csv_row(rec) << '\n';
      }
      break;
    }
    case OutputFormat::Table:
      for (std::size_t i = 0; i < records.size(); ++i) {
        if (i) os << '\n';
        os << to_table(records[i]);
      }
      break;
  }
  return os.str();
}

SelfCheckResult run_self_check() {
  SelfCheckResult result{self_check_suite(), true};
  for (const OracleReport& r : result.reports) {
    if (!r.passed) result.all_passed = false;
  }
  return result;
}

std::string render_self_check(const SelfCheckResult& result, OutputFormat format) {
  std::ostringstream os;
  int passed = 0;
  for (const OracleReport& r : result.reports) {
    if (r.passed) ++passed;
  }

  switch (format) {
    case OutputFormat::Json: {
      os << "{\"command\":\"self-check\",\"schema_version\":\"" << kSchemaVersion
         << "\",\"reports\":[";
      for (std::size_t i = 0; i < result.reports.size(); ++i) {
        const OracleReport& r = result.reports[i];
        if (i) os << ',';
        os << "{\"quantity\":\"" << r.quantity << "\",\"primary_value\":"
           << format_double(r.primary_value)
           << ",\"oracle_value\":" << format_double(r.oracle_value)
           << ",\"relative_error\":" << format_double(r.relative_error)
           << ",\"tolerance\":" << format_double(r.tolerance)
           << ",\"passed\":" << (r.passed ? "true" : "false") << '}';
      }
      os << "],\"all_passed\":" << (result.all_passed ? "true" : "false") << "}\n";
      break;
    }
    case OutputFormat::Csv: {
      os << "quantity,primary_value,oracle_value,relative_error,tolerance,passed\n";
      for (const OracleReport& r : result.reports) {
        std::string quantity = r.quantity;
        // quantities contain no commas/quotes by construction
        os << quantity << ',' << format_double(r.primary_value) << ','
           << format_double(r.oracle_value) << ',' << format_double(r.relative_error)
           << ',' << format_double(r.tolerance) << ','
           << (r.passed ? "true" : "false") << '\n';
      }
      break;
    }
    case OutputFormat::Table: {
      for (const OracleReport& r : result.reports) {
        os << (r.passed ? "PASS  " : "FAIL  ") << r.quantity
           << "  rel=" << format_double(r.relative_error)
           << " tol=" << format_double(r.tolerance) << '\n';
      }
      os << "self-check: " << passed << '/' << result.reports.size() << " passed\n";
      break;
    }
  }
  return os.str();
}

}  // namespace cstherm
