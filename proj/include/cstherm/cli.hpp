#ifndef CSTHERM_CLI_HPP
#define CSTHERM_CLI_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cstherm/constants.hpp"
#include "cstherm/kgf_field.hpp"
#include "cstherm/output.hpp"
#include "cstherm/verification.hpp"

namespace cstherm {

// Flags shared by every subcommand. `constants()` resolves the overrides on
// top of the selected unit system.
struct CommonOptions {
  UnitSystem units = UnitSystem::SI;
  std::vector<std::pair<std::string, double>> const_overrides;

  ConstantsSet constants() const;
};

struct OscillatorOptions {
  CommonOptions common;
  double mass = 1.0;
  double omega = 1.0;
  std::optional<double> nbar;
  std::optional<double> d_re;
  std::optional<double> d_im;
};

struct BlochOptions {
  CommonOptions common;
  double omega = 1.0;
  double t_hb = 0.0;
  double mass = 1.0;
  // optional coordinate grid for a (q, b(q)) dump
  std::optional<double> q_from;
  std::optional<double> q_to;
  int q_points = 0;
};

struct FieldOptions {
  CommonOptions common;
  std::optional<std::string> spectrum_path;
  std::optional<double> radius;
  std::optional<double> compton;
  double prefactor = 1.0;
  double coupling = 1.0;
  SourceProfile profile = SourceProfile::UniformBall;
  std::optional<double> potential_at;
  double quad_tol = 1e-8;
  double temperature_validity_threshold = 10.0;
};

struct BlackholeOptions {
  CommonOptions common;
  std::optional<double> solar_masses;
  std::optional<double> area;
  double beta = 4.0;
  int kappa = 2;
};

enum class SweepBase { Oscillator, Bloch, Field, Blackhole };

struct SweepOptions {
  std::string var;  // nbar | t-hb | mass | radius
  double from = 0.0;
  double to = 0.0;
  int points = 0;
  bool log_scale = false;

  SweepBase base = SweepBase::Oscillator;
  OscillatorOptions oscillator;
  BlochOptions bloch;
  FieldOptions field;
  BlackholeOptions blackhole;
};

// Each run_* resolves defaults, computes, and packs a deterministic record.
// Validation problems surface as std::domain_error (exit 2 at the CLI),
// numerical non-convergence as ConvergenceError (exit 3).
OutputRecord run_oscillator(const OscillatorOptions& opt);

// First record is the T_Bl summary; with a q-grid one distribution record
// per grid point follows.
std::vector<OutputRecord> run_bloch(const BlochOptions& opt);

OutputRecord run_field(const FieldOptions& opt);

OutputRecord run_blackhole(const BlackholeOptions& opt);

std::vector<OutputRecord> run_sweep(const SweepOptions& opt);

// Renders records in the requested format (sweeps and grids: one row per
// record, CSV header emitted once).
std::string render_records(const std::vector<OutputRecord>& records, OutputFormat format);

// Self-check suite as records plus the overall verdict.
struct SelfCheckResult {
  std::vector<OracleReport> reports;
  bool all_passed;
};
SelfCheckResult run_self_check();
std::string render_self_check(const SelfCheckResult& result, OutputFormat format);

}  // namespace cstherm

#endif
