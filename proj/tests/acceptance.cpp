// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "cstherm/blackhole.hpp"
#include "cstherm/cli.hpp"
#include "cstherm/coherent.hpp"
#include "cstherm/kahan.hpp"
#include "cstherm/kgf_field.hpp"
#include "cstherm/thermo.hpp"
#include "cstherm/verification.hpp"
#include "exec_util.hpp"
#include "test_util.hpp"

using namespace cstherm;
using cstherm::test::rel_diff;
using cstherm::test::Rng;
using cstherm::test::run_cli;

namespace {

int failures = 0;

void report(int index, bool passed, const std::string& text) {
  std::printf("[%2d] %s  %s\n", index, passed ? "PASS" : "FAIL", text.c_str());
  if (!passed) ++failures;
}

const ConstantsSet nat = ConstantsSet::natural();

double closed_form_T(double alpha, double nbar) {
  return nat.hbar() * alpha / (2.0 * nat.k_B() * std::log1p(1.0 / (2.0 * nbar)));
}

double closed_form_dT_dnbar(double alpha, double nbar) {
  const double L = std::log1p(1.0 / (2.0 * nbar));
  return nat.hbar() * alpha / (4.0 * nat.k_B() * L * L * nbar * (nbar + 0.5));
}

// 1. Poisson normalization under the adaptive truncation rule
void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (double nbar : {0.1, 1.0, 10.0, 100.0, 1000.0}) {
    const FockWeights fw = fock_weights(nbar, 1e-12);
    KahanAccumulator sum;
    for (double w : fw.weights) sum.add(w);
    ok = ok && std::abs(sum.total() - 1.0) < 1e-10;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok = ok && seconds < 0.1;
  report(1, ok, "Fock-weight normalization |sum-1| < 1e-10 for nbar in {0.1..1000}, < 0.1 s");
}

// 2. mean energy against the brute-force Fock sum
void criterion_2() {
  Rng rng(20260810);
  bool ok = true;
  for (int i = 0; i < 20; ++i) {
    const OscillatorConfig cfg(rng.uniform(0.1, 10.0), rng.uniform(0.1, 10.0), nat);
    const double nbar = rng.uniform(0.0, 50.0);
    ok = ok && rel_diff(mean_energy(cfg, nbar),
                        fock_sum_oracle(cfg, nbar, FockObservable::Energy)) < 1e-9;
  }
  report(2, ok, "mean energy = Fock-sum oracle to rel 1e-9 on 20 random configs");
}

// 3. the closed form solves the temperature equation
void criterion_3() {
  const double alpha = 1.0;
  bool ok = true;
  for (int i = 0; i < 100; ++i) {
    const double nbar = 0.1 * std::pow(10.0, 5.0 * i / 99.0);  // [0.1, 1e4]
    const double T = closed_form_T(alpha, nbar);
    const double lhs =
        nat.hbar() * alpha * nbar * (nbar + 0.5) * closed_form_dT_dnbar(alpha, nbar);
    const double rhs = nat.k_B() * T * T;
    ok = ok && rel_diff(lhs, rhs) < 1e-10;
  }
  report(3, ok, "closed form solves the dT/dnbar equation, residual < 1e-10 on 100 points");
}

// 4. the adaptive integrator tracks the closed form
void criterion_4() {
  const auto start = std::chrono::steady_clock::now();
  const double alpha = 1.0;
  const auto samples =
      temperature_ode_solve(alpha, 0.5, 100.0, closed_form_T(alpha, 0.5), 1e-9, nat);
  double max_dev = 0.0;
  for (const auto& s : samples) {
    max_dev = std::max(max_dev, rel_diff(s.temperature, closed_form_T(alpha, s.nbar)));
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(4, max_dev < 1e-6 && seconds < 1.0,
         "ODE solution tracks the closed form to rel 1e-6 up to nbar=100, < 1 s");
}

// 5. approach to the high-occupation limit
void criterion_5() {
  const OscillatorConfig cfg(1.0, 1.0, nat);
  const double ratio100 = temperature_closed_form(cfg, 100.0) * nat.k_B() / cfg.omega;
  bool ok = std::abs(ratio100 - 1.00251) <= 1e-4;
  double previous = ratio100 - 1.0;
  for (double nbar : {200.0, 400.0, 800.0, 1600.0}) {
    const double dev = temperature_closed_form(cfg, nbar) * nat.k_B() / cfg.omega - 1.0;
    ok = ok && dev > 0.0 && dev < previous;
    previous = dev;
  }
  report(5, ok, "T(100) k_B/(hbar omega) = 1.00251 +- 1e-4, deviation monotone to nbar=1600");
}

// 6. the three entropy routes agree
void criterion_6() {
  Rng rng(600);
  bool ok = true;
  for (int i = 0; i < 20; ++i) {
    const double mass = rng.uniform(0.2, 5.0);
    const double omega = rng.uniform(0.2, 5.0);
    const double gamma = rng.uniform(0.1, 3.0);
    const double T = rng.uniform(0.2, 8.0);
    const double nbar = gamma * T;

    const double s_analytic = entropy_analytic(nbar, nbar, nat);
    const double s_numeric = entropy_numeric(OccupationModel::linear(gamma), T, nat);
    const OscillatorConfig cfg(mass, omega, nat);
    const double d_abs = std::sqrt(2.0 * nat.hbar() * nbar / (mass * omega));
    const double s_area = area_law(cfg, d_abs).entropy;
    const double reference = 2.0 * nat.k_B() * nbar;

    ok = ok && rel_diff(s_analytic, reference) < 1e-8 &&
         rel_diff(s_numeric, reference) < 1e-8 && rel_diff(s_area, reference) < 1e-8;
  }
  report(6, ok, "S = 2 k_B nbar from analytic, numeric and area-law routes to rel 1e-8");
}

// 7. the zero-point branch
void criterion_7() {
  bool ok = true;
  for (double omega : {0.5, 1.0, 3.7}) {
    const OscillatorConfig cfg(1.0, omega, nat);
    const ThermoPoint zp = zero_point(cfg);
    ok = ok && zp.T == nat.hbar() * omega / (2.0 * nat.k_B());
    ok = ok && zp.E == 0.5 * nat.hbar() * omega;
    ok = ok && zp.F == 0.0;
    ok = ok && zp.S == nat.k_B();
    const double T_cold = nat.hbar() * omega / (100.0 * nat.k_B());
    ok = ok && rel_diff(bloch_temperature(cfg, T_cold), zp.T) < 1e-10;
  }
  report(7, ok, "zero-point branch (T,E,F,S) exact; cold-bath Bloch matches to rel 1e-10");
}

// 8. classical limit of the Bloch temperature
void criterion_8() {
  const OscillatorConfig cfg(1.0, 1.0, nat);
  const double t_hb = 20.0 * nat.hbar() * cfg.omega / nat.k_B();
  const double t_bl = bloch_temperature(cfg, t_hb);
  report(8, std::abs(t_bl - t_hb) / t_hb < 3e-4,
         "Bloch temperature within 3e-4 of the bath at k_B T_hb = 20 hbar omega");
}

// 9. Yukawa potential: both verification routes
void criterion_9() {
  bool ok = true;

  const double lambda = 1.0;
  const SphericalSource tiny(1.0, lambda / 100.0, lambda, SourceProfile::UniformBall);
  const SphericalSource point(1.0, 0.0, lambda, SourceProfile::PointLike);
  const double r0 = 3.0 * lambda;
  ok = ok && rel_diff(yukawa_potential(tiny, r0, 1e-8), yukawa_potential(point, r0)) < 1e-4;

  Rng rng(900);
  for (int i = 0; i < 10; ++i) {
    const double d = rng.uniform(0.3, 2.0);
    const double lc = rng.uniform(0.2, 1.5);
    const double r = d + rng.uniform(0.3, 3.0) * lc;
    const SphericalSource ball(1.0, d, lc, SourceProfile::UniformBall);
    ok = ok &&
         rel_diff(yukawa_potential(ball, r, 1e-8), nested_quadrature_oracle(ball, r)) < 1e-6;
  }
  report(9, ok, "Yukawa: point limit to rel 1e-4; ball vs nested oracle to rel 1e-6 x10");
}

// 10. black-hole entropy and both beta routes
void criterion_10() {
  const ConstantsSet si = ConstantsSet::si();
  bool ok = true;

  const double A = horizon_area(kSolarMassKg, si);
  const BhEntropy s = bh_entropy(A, si);
  ok = ok && std::abs(s.entropy_over_kB - 1.049e77) / 1.049e77 < 5e-3;

  const double lp = planck_length(si);
  for (double beta : {4.0, 8.0}) {
    const double reference = A / (beta * lp * lp);
    for (double kappa : {2.0, 3.0, 10.0, 100.0}) {
      const double ln_q = bekenstein_log_states(A, kappa, alpha_from_kappa(beta, kappa), si);
      ok = ok && rel_diff(ln_q, reference) < 1e-12;
    }
  }

  const EquivalenceReport r4 =
      coherent_equivalence_report(BlackHoleConfig::from_mass(kSolarMassKg, 4.0, 2.0, si));
  const EquivalenceReport r8 =
      coherent_equivalence_report(BlackHoleConfig::from_mass(kSolarMassKg, 8.0, 2.0, si));
  ok = ok && r4.route1_matches && rel_diff(r4.entropy_boltzmann, r4.entropy_target) < 1e-12;
  ok = ok && r8.route2_matches && rel_diff(r8.entropy_coherent, r8.entropy_target) < 1e-12;

  report(10, ok,
         "S/k_B(1 Msun) = 1.049e77 +- 0.5%; kappa-invariance and both beta routes to 1e-12");
}

// 11. CLI determinism and the oracle suite
void criterion_11() {
  const std::string bin = CSTHERM_BIN;
  bool ok = true;
  const std::string invocations[] = {
      "oscillator --units natural --mass 1 --omega 1 --nbar 1 --format json",
      "bloch --units natural --omega 1 --t-hb 0.01 --format json",
      "field --units natural --radius 10 --compton 0.1 --prefactor 1 --format json",
      "blackhole --solar-masses 1 --beta 4 --kappa 2 --format json",
      "sweep --var nbar --from 0.5 --to 100 --points 25 --scale log --format csv "
      "oscillator --units natural",
  };
  for (const std::string& args : invocations) {
    const auto first = run_cli(bin, args);
    const auto second = run_cli(bin, args);
    ok = ok && first.exit_code == 0 && second.exit_code == 0 &&
         first.output == second.output && !first.output.empty();
  }
  const auto check = run_cli(bin, "--self-check");
  ok = ok && check.exit_code == 0;
  report(11, ok, "byte-identical CLI reruns for every subcommand; --self-check green");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();

  if (failures == 0) {
    std::printf("acceptance: all 11 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return 1;
}
