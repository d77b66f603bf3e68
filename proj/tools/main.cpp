#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cstherm/cli.hpp"
#include "cstherm/errors.hpp"

namespace {

using namespace cstherm;

struct CommonFlags {
  std::string units = "si";
  std::vector<std::string> const_overrides;
  std::string format = "table";
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags, const std::string& default_format) {
  flags.format = default_format;
  cmd->add_option("--units", flags.units, "unit system")
      ->check(CLI::IsMember({"si", "natural"}))
      ->envname("CSTHERM_UNITS")
      ->capture_default_str();
  cmd->add_option("--const", flags.const_overrides,
                  "override a constant as name=value (repeatable)");
  cmd->add_option("--format", flags.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
}

CommonOptions resolve_common(const CommonFlags& flags) {
  CommonOptions out;
  out.units = flags.units == "natural" ? UnitSystem::Natural : UnitSystem::SI;
  for (const std::string& entry : flags.const_overrides) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::domain_error("--const expects name=value, got '" + entry + "'");
    }
    const std::string name = entry.substr(0, eq);
    const std::string text = entry.substr(eq + 1);
    std::size_t consumed = 0;
    double value = 0.0;
    try {
      value = std::stod(text, &consumed);
    } catch (const std::exception&) {
      throw std::domain_error("--const " + name + ": cannot parse value '" + text + "'");
    }
    if (consumed != text.size()) {
      throw std::domain_error("--const " + name + ": cannot parse value '" + text + "'");
    }
    out.const_overrides.emplace_back(name, value);
  }
  return out;
}

struct OscillatorFlags {
  CommonFlags common;
  OscillatorOptions opts;
  double nbar = 0.0;
  double d_re = 0.0;
  double d_im = 0.0;
  CLI::Option* nbar_opt = nullptr;
  CLI::Option* d_re_opt = nullptr;
  CLI::Option* d_im_opt = nullptr;
};

void add_oscillator_flags(CLI::App* cmd, OscillatorFlags& f, const std::string& fmt) {
  add_common_flags(cmd, f.common, fmt);
  cmd->add_option("--mass", f.opts.mass, "oscillator mass")->capture_default_str();
  cmd->add_option("--omega", f.opts.omega, "angular frequency")->capture_default_str();
  f.nbar_opt = cmd->add_option("--nbar", f.nbar, "mean occupation");
  f.d_re_opt = cmd->add_option("--d-re", f.d_re, "displacement, real part");
  f.d_im_opt = cmd->add_option("--d-im", f.d_im, "displacement, imaginary part");
}

OscillatorOptions resolve_oscillator(const OscillatorFlags& f) {
  OscillatorOptions o = f.opts;
  o.common = resolve_common(f.common);
  if (f.nbar_opt->count() > 0) o.nbar = f.nbar;
  if (f.d_re_opt->count() > 0) o.d_re = f.d_re;
  if (f.d_im_opt->count() > 0) o.d_im = f.d_im;
  return o;
}

struct BlochFlags {
  CommonFlags common;
  BlochOptions opts;
  double q_from = 0.0;
  double q_to = 0.0;
  CLI::Option* q_from_opt = nullptr;
  CLI::Option* q_to_opt = nullptr;
};

void add_bloch_flags(CLI::App* cmd, BlochFlags& f, const std::string& fmt,
                     bool require_t_hb) {
  add_common_flags(cmd, f.common, fmt);
  cmd->add_option("--mass", f.opts.mass, "oscillator mass")->capture_default_str();
  cmd->add_option("--omega", f.opts.omega, "angular frequency")->capture_default_str();
  CLI::Option* t = cmd->add_option("--t-hb", f.opts.t_hb, "heat-bath temperature");
  if (require_t_hb) t->required();
  f.q_from_opt = cmd->add_option("--q-from", f.q_from, "distribution grid start");
  f.q_to_opt = cmd->add_option("--q-to", f.q_to, "distribution grid end");
  cmd->add_option("--q-points", f.opts.q_points, "distribution grid points");
}

BlochOptions resolve_bloch(const BlochFlags& f) {
  BlochOptions o = f.opts;
  o.common = resolve_common(f.common);
  if (f.q_from_opt->count() > 0) o.q_from = f.q_from;
  if (f.q_to_opt->count() > 0) o.q_to = f.q_to;
  return o;
}

struct FieldFlags {
  CommonFlags common;
  FieldOptions opts;
  std::string spectrum;
  double radius = 0.0;
  double compton = 0.0;
  double potential_at = 0.0;
  std::string profile = "ball";
  CLI::Option* spectrum_opt = nullptr;
  CLI::Option* radius_opt = nullptr;
  CLI::Option* compton_opt = nullptr;
  CLI::Option* potential_opt = nullptr;
};

void add_field_flags(CLI::App* cmd, FieldFlags& f, const std::string& fmt) {
  add_common_flags(cmd, f.common, fmt);
  f.spectrum_opt = cmd->add_option("--spectrum", f.spectrum,
                                   "mode spectrum CSV (header omega,nbar)");
  f.radius_opt = cmd->add_option("--radius", f.radius, "source radius");
  f.compton_opt = cmd->add_option("--compton", f.compton, "screening length lambda_C");
  cmd->add_option("--prefactor", f.opts.prefactor, "occupancy estimate prefactor")
      ->capture_default_str();
  cmd->add_option("--coupling", f.opts.coupling, "source coupling g")
      ->capture_default_str();
  cmd->add_option("--profile", f.profile, "source profile")
      ->check(CLI::IsMember({"ball", "point"}))
      ->capture_default_str();
  f.potential_opt =
      cmd->add_option("--potential-at", f.potential_at, "evaluate the potential at r");
  cmd->add_option("--quad-tol", f.opts.quad_tol, "quadrature relative tolerance")
      ->capture_default_str();
  cmd->add_option("--nbar-threshold", f.opts.temperature_validity_threshold,
                  "validity threshold for the field temperature")
      ->capture_default_str();
}

FieldOptions resolve_field(const FieldFlags& f) {
  FieldOptions o = f.opts;
  o.common = resolve_common(f.common);
  if (f.spectrum_opt->count() > 0) o.spectrum_path = f.spectrum;
  if (f.radius_opt->count() > 0) o.radius = f.radius;
  if (f.compton_opt->count() > 0) o.compton = f.compton;
  if (f.potential_opt->count() > 0) o.potential_at = f.potential_at;
  o.profile = f.profile == "point" ? SourceProfile::PointLike : SourceProfile::UniformBall;
  return o;
}

struct BlackholeFlags {
  CommonFlags common;
  BlackholeOptions opts;
  double solar_masses = 0.0;
  double area = 0.0;
  CLI::Option* solar_opt = nullptr;
  CLI::Option* area_opt = nullptr;
};

void add_blackhole_flags(CLI::App* cmd, BlackholeFlags& f, const std::string& fmt) {
  add_common_flags(cmd, f.common, fmt);
  f.solar_opt = cmd->add_option("--solar-masses", f.solar_masses, "mass in solar masses");
  f.area_opt = cmd->add_option("--area", f.area, "horizon area in m^2");
  cmd->add_option("--beta", f.opts.beta, "patch-size convention (4 or 8)")
      ->capture_default_str();
  cmd->add_option("--kappa", f.opts.kappa, "quantum states per patch")
      ->capture_default_str();
}

BlackholeOptions resolve_blackhole(const BlackholeFlags& f) {
  BlackholeOptions o = f.opts;
  o.common = resolve_common(f.common);
  if (f.solar_opt->count() > 0) o.solar_masses = f.solar_masses;
  if (f.area_opt->count() > 0) o.area = f.area;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"thermodynamics of quantum coherent states"};
  app.fallthrough();

  bool self_check = false;
  bool show_version = false;
  std::string top_format = "table";
  app.add_flag("--self-check", self_check, "run the numerical oracle suite");
  app.add_flag("--version", show_version, "print version and schema version");
  app.add_option("--format", top_format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  OscillatorFlags osc;
  CLI::App* osc_cmd =
      app.add_subcommand("oscillator", "coherent-state oscillator thermodynamics");
  add_oscillator_flags(osc_cmd, osc, "table");

  BlochFlags bloch;
  CLI::App* bloch_cmd =
      app.add_subcommand("bloch", "heat-bath effective temperature (Bloch formula)");
  add_bloch_flags(bloch_cmd, bloch, "table", true);

  FieldFlags field;
  CLI::App* field_cmd =
      app.add_subcommand("field", "multimode scalar-field coherent state");
  add_field_flags(field_cmd, field, "table");

  BlackholeFlags bh;
  CLI::App* bh_cmd = app.add_subcommand("blackhole", "horizon-area entropy");
  add_blackhole_flags(bh_cmd, bh, "table");

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "evaluate a base command over a parameter grid");
  std::string sweep_var;
  double sweep_from = 0.0;
  double sweep_to = 0.0;
  int sweep_points = 0;
  std::string sweep_scale = "linear";
  std::string sweep_format = "csv";
  sweep_cmd->add_option("--var", sweep_var, "swept variable")
      ->check(CLI::IsMember({"nbar", "t-hb", "mass", "radius"}))
      ->required();
  sweep_cmd->add_option("--from", sweep_from, "first value")->required();
  sweep_cmd->add_option("--to", sweep_to, "last value")->required();
  sweep_cmd->add_option("--points", sweep_points, "number of points")->required();
  sweep_cmd->add_option("--scale", sweep_scale, "grid spacing")
      ->check(CLI::IsMember({"linear", "log"}))
      ->capture_default_str();
  sweep_cmd->add_option("--format", sweep_format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sweep_cmd->require_subcommand(1);

  OscillatorFlags sw_osc;
  CLI::App* sw_osc_cmd = sweep_cmd->add_subcommand("oscillator", "sweep the oscillator");
  sw_osc_cmd->fallthrough();
  add_oscillator_flags(sw_osc_cmd, sw_osc, "csv");

  BlochFlags sw_bloch;
  CLI::App* sw_bloch_cmd = sweep_cmd->add_subcommand("bloch", "sweep the Bloch formula");
  sw_bloch_cmd->fallthrough();
  add_bloch_flags(sw_bloch_cmd, sw_bloch, "csv", false);

  FieldFlags sw_field;
  CLI::App* sw_field_cmd = sweep_cmd->add_subcommand("field", "sweep the field estimate");
  sw_field_cmd->fallthrough();
  add_field_flags(sw_field_cmd, sw_field, "csv");

  BlackholeFlags sw_bh;
  CLI::App* sw_bh_cmd = sweep_cmd->add_subcommand("blackhole", "sweep the horizon mass");
  sw_bh_cmd->fallthrough();
  add_blackhole_flags(sw_bh_cmd, sw_bh, "csv");

  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (show_version) {
      std::cout << "cstherm " << kToolVersion << " schema " << kSchemaVersion << '\n';
      return 0;
    }
    if (self_check) {
      const SelfCheckResult result = run_self_check();
      std::cout << render_self_check(result, parse_output_format(top_format));
      return result.all_passed ? 0 : 1;
    }

    if (osc_cmd->parsed()) {
      const OutputRecord rec = run_oscillator(resolve_oscillator(osc));
      std::cout << render_records({rec}, parse_output_format(osc.common.format));
      return 0;
    }
    if (bloch_cmd->parsed()) {
      const auto records = run_bloch(resolve_bloch(bloch));
      std::cout << render_records(records, parse_output_format(bloch.common.format));
      return 0;
    }
    if (field_cmd->parsed()) {
      const OutputRecord rec = run_field(resolve_field(field));
      std::cout << render_records({rec}, parse_output_format(field.common.format));
      return 0;
    }
    if (bh_cmd->parsed()) {
      const OutputRecord rec = run_blackhole(resolve_blackhole(bh));
      std::cout << render_records({rec}, parse_output_format(bh.common.format));
      return 0;
    }
    if (sweep_cmd->parsed()) {
      SweepOptions s;
      s.var = sweep_var;
      s.from = sweep_from;
      s.to = sweep_to;
      s.points = sweep_points;
      s.log_scale = sweep_scale == "log";
      if (sw_osc_cmd->parsed()) {
        s.base = SweepBase::Oscillator;
        s.oscillator = resolve_oscillator(sw_osc);
      } else if (sw_bloch_cmd->parsed()) {
        s.base = SweepBase::Bloch;
        s.bloch = resolve_bloch(sw_bloch);
      } else if (sw_field_cmd->parsed()) {
        s.base = SweepBase::Field;
        s.field = resolve_field(sw_field);
      } else {
        s.base = SweepBase::Blackhole;
        s.blackhole = resolve_blackhole(sw_bh);
      }
      const auto rows = run_sweep(s);
      std::cout << render_records(rows, parse_output_format(sweep_format));
      return 0;
    }

    std::cerr << app.help();
    return 2;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
