#include "cstherm/verification.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "cstherm/blackhole.hpp"
#include "cstherm/errors.hpp"
#include "cstherm/kahan.hpp"
#include "cstherm/quadrature.hpp"
#include "cstherm/thermo.hpp"

namespace cstherm {

namespace {

constexpr int kSimpsonMaxDepth = 40;

double simpson_estimate(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                            double fa, double fm, double fb, double whole, double tol,
                            int depth) {
  if (depth <= 0) {
    throw ConvergenceError("adaptive_simpson: recursion depth exhausted");
  }
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson_estimate(a, m, fa, flm, fm);
  const double right = simpson_estimate(m, b, fm, frm, fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

// Deliberately a different strategy from the Gauss-Kronrod routine the
// primary path uses: plain recursive Simpson with absolute-tolerance split.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol) {
  const double fa = f(a);
  const double fm = f(0.5 * (a + b));
  const double fb = f(b);
  const double whole = simpson_estimate(a, b, fa, fm, fb);
  const double tol = rel_tol * std::max(std::abs(whole), 1e-300);
  return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, kSimpsonMaxDepth);
}

int oracle_truncation(double nbar) {
  return static_cast<int>(std::ceil(nbar + 14.0 * std::sqrt(nbar) + 60.0));
}

// Stirling-series error term ln n! - [(n+1/2) ln n - n + ln(2 pi)/2].
// The naive lgamma difference cancels catastrophically for large n; the
// asymptotic series is exact to double precision from n = 16 on.
double stirling_error(double n) {
  constexpr double s0 = 1.0 / 12.0;
  constexpr double s1 = 1.0 / 360.0;
  constexpr double s2 = 1.0 / 1260.0;
  constexpr double s3 = 1.0 / 1680.0;
  constexpr double s4 = 1.0 / 1188.0;
  if (n < 16.0) {
    return std::lgamma(n + 1.0) - (n + 0.5) * std::log(n) + n -
           0.5 * std::log(2.0 * std::numbers::pi);
  }
  const double inv2 = 1.0 / (n * n);
  return (s0 - (s1 - (s2 - (s3 - s4 * inv2) * inv2) * inv2) * inv2) / n;
}

// deviance x ln(x/mu) + mu - x, evaluated by series when x ~ mu so the
// leading terms never cancel
double poisson_deviance(double x, double mu) {
  if (std::abs(x - mu) < 0.1 * (x + mu)) {
    const double v = (x - mu) / (x + mu);
    double s = (x - mu) * v;
    double ej = 2.0 * x * v;
    const double v2 = v * v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v2;
      const double s1 = s + ej / (2 * j + 1);
      if (s1 == s) return s1;
      s = s1;
    }
    return s;
  }
  return x * std::log(x / mu) + mu - x;
}

// Poisson pmf e^{-mu} mu^n / n! in saddle-point form, accurate to a few ulp
// for every (n, mu) unlike the direct log-factorial route
double poisson_pmf(int n, double mu) {
  if (n == 0) return std::exp(-mu);
  const double nd = static_cast<double>(n);
  return std::exp(-stirling_error(nd) - poisson_deviance(nd, mu)) /
         std::sqrt(2.0 * std::numbers::pi * nd);
}

}  // namespace

OracleReport make_oracle_report(std::string quantity, double primary_value,
                                double oracle_value, double tolerance) {
  double rel;
  if (oracle_value == 0.0) {
    rel = std::abs(primary_value - oracle_value);  // absolute fallback
  } else {
    rel = std::abs(primary_value - oracle_value) / std::abs(oracle_value);
  }
  return OracleReport{std::move(quantity), primary_value, oracle_value, rel,
                      tolerance, rel <= tolerance};
}

double fock_sum_oracle(const OscillatorConfig& cfg, double nbar, FockObservable observable) {
  if (nbar < 0.0 || !std::isfinite(nbar)) {
    throw std::domain_error("fock_sum_oracle: nbar must be finite and >= 0");
  }
  if (nbar > 1e4) {
    throw OracleScaleError("fock_sum_oracle: validated only for nbar <= 1e4");
  }

  const double hw = cfg.cs.hbar() * cfg.omega;
  const auto f = [&](int n) -> double {
    switch (observable) {
      case FockObservable::Norm:
        return 1.0;
      case FockObservable::MeanN:
        return static_cast<double>(n);
      case FockObservable::VarN: {
        const double dev = static_cast<double>(n) - nbar;
        return dev * dev;
      }
      case FockObservable::Energy:
        return hw * (static_cast<double>(n) + 0.5);
    }
    return 0.0;
  };

  if (nbar == 0.0) {
    return f(0);
  }

  // Direct per-term evaluation, no recurrence shared with the primary path.
  const int n_max = oracle_truncation(nbar);
  KahanAccumulator acc;
  for (int n = 0; n <= n_max; ++n) {
    acc.add(poisson_pmf(n, nbar) * f(n));
  }
  return acc.total();
}

double nested_quadrature_oracle(const SphericalSource& src, double r) {
  if (src.profile != SourceProfile::UniformBall) {
    throw std::domain_error("nested_quadrature_oracle: requires a UniformBall source");
  }
  if (!(r > src.radius_d)) {
    throw std::domain_error("nested_quadrature_oracle: r must exceed the source radius");
  }

  const double a = src.radius_d;
  const double lambda = src.lambda_C;

  // full double integral over radius and polar angle, azimuth integrated
  // trivially to 2 pi; no use of the closed-form angular average
  const auto inner = [&](double rp) {
    const auto kernel = [&](double theta) {
      const double R =
          std::sqrt(r * r + rp * rp - 2.0 * r * rp * std::cos(theta));
      return std::sin(theta) * std::exp(-R / lambda) / R;
    };
    return rp * rp * adaptive_simpson(kernel, 0.0, std::numbers::pi, 1e-10);
  };

  const double radial = adaptive_simpson(inner, 0.0, a, 1e-9);
  const double density = 3.0 / (4.0 * std::numbers::pi * a * a * a);
  return src.g * density * 2.0 * std::numbers::pi * radial;
}

OracleReport finite_difference_check(const std::function<double(double)>& f, double x,
                                     double analytic_df, double tolerance) {
  const double h = std::cbrt(std::numeric_limits<double>::epsilon()) *
                   std::max(std::abs(x), 1.0);
  const auto central = [&](double step) {
    return (f(x + step) - f(x - step)) / (2.0 * step);
  };
  const double d_h = central(h);
  const double d_h2 = central(0.5 * h);
  const double richardson = (4.0 * d_h2 - d_h) / 3.0;
  return make_oracle_report("finite-difference derivative", analytic_df, richardson,
                            tolerance);
}

std::vector<OracleReport> self_check_suite() {
  std::vector<OracleReport> reports;
  const ConstantsSet nat = ConstantsSet::natural();
  const ConstantsSet si = ConstantsSet::si();

  {
    const double lp = planck_length(si);
    reports.push_back(make_oracle_report(
        "planck_length round-trip lp^2 c^3 / G = hbar",
        lp * lp * si.c() * si.c() * si.c() / si.G(), si.hbar(), 1e-14));
  }
  {
    const double m_e = 9.1093837e-31;
    reports.push_back(make_oracle_report(
        "compton_wavelength round-trip lc m c / hbar = 1",
        compton_wavelength(si, m_e) * m_e * si.c() / si.hbar(), 1.0, 1e-14));
  }
  {
    const OscillatorConfig cfg(1.0, 1.7, nat);
    reports.push_back(make_oracle_report(
        "oscillator mean energy vs Fock sum (nbar=2.4)",
        mean_energy(cfg, 2.4), fock_sum_oracle(cfg, 2.4, FockObservable::Energy), 1e-9));
  }
  {
    const OscillatorConfig cfg(1.0, 2.0, nat);
    const std::complex<double> d{1.1, -0.4};
    const double nbar = occupation_from_amplitude(cfg, d);
    reports.push_back(make_oracle_report(
        "occupation from amplitude vs Fock mean",
        nbar, fock_sum_oracle(cfg, nbar, FockObservable::MeanN), 1e-10));
  }
  {
    const OscillatorConfig cfg(1.0, 1.0, nat);
    reports.push_back(make_oracle_report(
        "Poisson normalization (nbar=30)",
        fock_sum_oracle(cfg, 30.0, FockObservable::Norm), 1.0, 1e-12));
    reports.push_back(make_oracle_report(
        "Poisson variance equals mean (nbar=7)",
        fock_sum_oracle(cfg, 7.0, FockObservable::VarN), 7.0, 1e-8));
  }
  {
    const OscillatorConfig cfg(1.0, 2.0, nat);
    const std::complex<double> d{1.1, 0.0};
    const double nbar = occupation_from_amplitude(cfg, d);
    const double q_times_vacuum =
        std::exp(log_partition_function(nbar)) * overlap_sq(cfg, d, {0.0, 0.0});
    reports.push_back(make_oracle_report(
        "partition function is the inverse vacuum overlap", q_times_vacuum, 1.0, 1e-12));
  }
  {
    // the closed-form temperature must solve the defining equation:
    // dT/dnbar equals the right-hand side
    const double alpha = 1.3;
    const OscillatorConfig probe(1.0, alpha * 3.0, nat);
    const auto T_of_nbar = [&](double nb) {
      const OscillatorConfig c(1.0, alpha * nb, nat);
      return temperature_closed_form(c, nb);
    };
    const double T3 = T_of_nbar(3.0);
    const double rhs = nat.k_B() * T3 * T3 /
                       (nat.hbar() * alpha * 3.0 * (3.0 + 0.5));
    OracleReport fd = finite_difference_check(T_of_nbar, 3.0, rhs, 1e-8);
    fd.quantity = "closed-form temperature solves the dT/dnbar equation (nbar=3)";
    reports.push_back(fd);
  }
  {
    const double alpha = 1.0;
    const OscillatorConfig seed_cfg(1.0, alpha * 0.5, nat);
    const double T_seed = temperature_closed_form(seed_cfg, 0.5);
    const auto samples = temperature_ode_solve(alpha, 0.5, 20.0, T_seed, 1e-9, nat);
    const OscillatorConfig end_cfg(1.0, alpha * 20.0, nat);
    reports.push_back(make_oracle_report(
        "temperature ODE endpoint vs closed form (nbar=20)",
        samples.back().temperature, temperature_closed_form(end_cfg, 20.0), 1e-6));
  }
  {
    const double gamma = 0.8;
    const double T = 2.5;
    const OccupationModel model = OccupationModel::linear(gamma);
    reports.push_back(make_oracle_report(
        "entropy: numeric derivative vs analytic (linear model)",
        entropy_numeric(model, T, nat),
        entropy_analytic(gamma * T, gamma * T, nat), 1e-8));
  }
  {
    const OscillatorConfig cfg(1.0, 1.0, nat);
    const double T_bl = bloch_temperature(cfg, 0.7);
    const double L = 10.0 * std::sqrt(nat.k_B() * T_bl / (cfg.mass * cfg.omega * cfg.omega));
    const QuadratureResult q = adaptive_gauss_kronrod(
        [&](double x) { return bloch_distribution(cfg, 0.7, x); }, -L, L, 1e-12);
    reports.push_back(
        make_oracle_report("Bloch distribution normalization", q.value, 1.0, 1e-10));
  }
  {
    const OscillatorConfig cfg(1.0, 1.0, nat);
    const double T_cold = cfg.cs.hbar() * cfg.omega / (100.0 * cfg.cs.k_B());
    reports.push_back(make_oracle_report(
        "Bloch temperature cold limit vs zero-point branch",
        bloch_temperature(cfg, T_cold), zero_point(cfg).T, 1e-10));
  }
  {
    const SphericalSource ball(1.0, 1.0, 0.5, SourceProfile::UniformBall);
    reports.push_back(make_oracle_report(
        "Yukawa ball: angular reduction vs nested quadrature",
        yukawa_potential(ball, 2.0, 1e-8), nested_quadrature_oracle(ball, 2.0), 1e-6));
  }
  {
    const double lambda = 1.0;
    const SphericalSource tiny(1.0, lambda / 100.0, lambda, SourceProfile::UniformBall);
    const SphericalSource point(1.0, 0.0, lambda, SourceProfile::PointLike);
    reports.push_back(make_oracle_report(
        "Yukawa ball point-source limit (d = lambda/100)",
        yukawa_potential(tiny, 10.0 * lambda, 1e-8),
        yukawa_potential(point, 10.0 * lambda), 1e-4));
  }
  {
    const BlackHoleConfig bh4 = BlackHoleConfig::from_mass(kSolarMassKg, 4.0, 2.0, si);
    const EquivalenceReport r4 = coherent_equivalence_report(bh4);
    reports.push_back(make_oracle_report(
        "black hole beta=4 Boltzmann route closes on the area law",
        r4.entropy_boltzmann, r4.entropy_target, 1e-12));

    const BlackHoleConfig bh8 = BlackHoleConfig::from_mass(kSolarMassKg, 8.0, 2.0, si);
    const EquivalenceReport r8 = coherent_equivalence_report(bh8);
    reports.push_back(make_oracle_report(
        "black hole beta=8 coherent route closes on the area law",
        r8.entropy_coherent, r8.entropy_target, 1e-12));
  }
  {
    const double lp = planck_length(si);
    const double A = 10.0 * lp * lp;
    const double ln_q2 =
        bekenstein_log_states(A, 2.0, alpha_from_kappa(4.0, 2.0), si);
    const double ln_q100 =
        bekenstein_log_states(A, 100.0, alpha_from_kappa(4.0, 100.0), si);
    reports.push_back(make_oracle_report(
        "kappa invariance of ln Q (kappa 2 vs 100)", ln_q2, ln_q100, 1e-12));
  }

  return reports;
}

}  // namespace cstherm
