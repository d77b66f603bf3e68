#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cstherm/blackhole.hpp"
#include "cstherm/coherent.hpp"
#include "test_util.hpp"

using namespace cstherm;
using cstherm::test::rel_diff;

namespace {
const ConstantsSet si = ConstantsSet::si();
}

TEST_CASE("horizon area") {
  const ConstantsSet nat = ConstantsSet::natural();
  CHECK(rel_diff(horizon_area(1.0, nat), 16.0 * std::numbers::pi) < 1e-15);

  const double A = horizon_area(kSolarMassKg, si);
  CHECK(rel_diff(A, 1.0966500359645964e8) < 1e-12);
  CHECK(std::abs(A - 1.097e8) / 1.097e8 < 1e-3);

  // cross-check through the Schwarzschild radius
  const double rs = 2.0 * si.G() * kSolarMassKg / (si.c() * si.c());
  CHECK(rel_diff(rs, 2954.1265550554051) < 1e-12);
  CHECK(rel_diff(A, 4.0 * std::numbers::pi * rs * rs) < 1e-14);

  CHECK(rel_diff(horizon_area(2.0 * kSolarMassKg, si), 4.0 * A) < 1e-15);
  CHECK_THROWS_AS((void)horizon_area(0.0, si), std::domain_error);
  CHECK_THROWS_AS((void)horizon_area(-1.0, si), std::domain_error);
}

TEST_CASE("area-law entropy") {
  const double lp = planck_length(si);
  const BhEntropy unit = bh_entropy(4.0 * lp * lp, si);
  CHECK(unit.entropy_over_kB == 1.0);
  CHECK(unit.entropy == si.k_B());

  const BhEntropy solar = bh_entropy(horizon_area(kSolarMassKg, si), si);
  CHECK(rel_diff(solar.entropy_over_kB, 1.0495141304015701e77) < 1e-10);
  CHECK(std::abs(solar.entropy_over_kB - 1.049e77) / 1.049e77 < 5e-3);

  const double A = 3.3e5;
  CHECK(rel_diff(bh_entropy(2.0 * A, si).entropy_over_kB,
                 2.0 * bh_entropy(A, si).entropy_over_kB) < 1e-13);
}

TEST_CASE("patch state count stays in log space") {
  const double lp = planck_length(si);

  // one patch of kappa = 2 states
  CHECK(rel_diff(bekenstein_log_states(lp * lp, 2.0, 1.0, si), std::log(2.0)) < 1e-14);

  // kappa = 4, alpha = 1, ten Planck patches
  CHECK(rel_diff(bekenstein_log_states(10.0 * lp * lp, 4.0, 1.0, si),
                 13.862943611198906188) < 1e-12);
  CHECK(std::abs(bekenstein_log_states(10.0 * lp * lp, 4.0, 1.0, si) -
                 10.0 * std::log(4.0)) < 1e-10);

  CHECK_THROWS_AS((void)bekenstein_log_states(lp * lp, 1.0, 1.0, si), std::domain_error);
  CHECK_THROWS_AS((void)bekenstein_log_states(lp * lp, 2.5, 1.0, si), std::domain_error);
  CHECK_THROWS_AS((void)bekenstein_log_states(-1.0, 2.0, 1.0, si), std::domain_error);
  CHECK_THROWS_AS((void)bekenstein_log_states(lp * lp, 2.0, 0.0, si), std::domain_error);
}

TEST_CASE("kappa cancels once alpha = beta ln kappa") {
  const double A = 7.7e3;
  for (double beta : {4.0, 8.0}) {
    const double reference = A / (beta * planck_length(si) * planck_length(si));
    for (double kappa : {2.0, 3.0, 10.0, 100.0}) {
      const double ln_q =
          bekenstein_log_states(A, kappa, alpha_from_kappa(beta, kappa), si);
      CHECK(rel_diff(ln_q, reference) < 1e-12);
    }
  }
}

TEST_CASE("microcanonical entropy") {
  CHECK(bekenstein_entropy(0.0, si) == 0.0);
  CHECK(bekenstein_entropy(2.0, si) == 2.0 * bekenstein_entropy(1.0, si));
  CHECK_THROWS_AS((void)bekenstein_entropy(-1.0, si), std::domain_error);

  // beta = 4 route closes onto the area law
  const double A = horizon_area(kSolarMassKg, si);
  const double ln_q = bekenstein_log_states(A, 2.0, alpha_from_kappa(4.0, 2.0), si);
  CHECK(rel_diff(bekenstein_entropy(ln_q, si), bh_entropy(A, si).entropy) < 1e-12);
}

TEST_CASE("alpha from kappa") {
  CHECK(rel_diff(alpha_from_kappa(4.0, std::numbers::e, KappaValidation::AnyRealAboveOne),
                 4.0) < 1e-15);
  CHECK(rel_diff(alpha_from_kappa(4.0, 2.0), 2.7725887222397812377) < 1e-12);
  CHECK(std::abs(alpha_from_kappa(4.0, 2.0) - 2.7726) < 1e-4);
  CHECK(rel_diff(alpha_from_kappa(6.0, 3.0), 1.5 * alpha_from_kappa(4.0, 3.0)) < 1e-15);
  CHECK_THROWS_AS((void)alpha_from_kappa(0.0, 2.0), std::domain_error);
  CHECK_THROWS_AS((void)alpha_from_kappa(4.0, std::numbers::e), std::domain_error);
  CHECK_THROWS_AS(
      (void)alpha_from_kappa(4.0, 1.0, KappaValidation::AnyRealAboveOne),
      std::domain_error);
}

TEST_CASE("equivalence report at beta = 4") {
  const BlackHoleConfig cfg = BlackHoleConfig::from_mass(kSolarMassKg, 4.0, 2.0, si);
  const EquivalenceReport r = coherent_equivalence_report(cfg);
  CHECK(r.route1_matches);
  CHECK(!r.route2_matches);
  CHECK(rel_diff(r.entropy_boltzmann, r.entropy_target) < 1e-12);
  CHECK(rel_diff(r.entropy_coherent, 2.0 * r.entropy_target) < 1e-12);
}

TEST_CASE("equivalence report at beta = 8") {
  const BlackHoleConfig cfg = BlackHoleConfig::from_mass(kSolarMassKg, 8.0, 2.0, si);
  const EquivalenceReport r = coherent_equivalence_report(cfg);
  CHECK(!r.route1_matches);
  CHECK(r.route2_matches);
  CHECK(rel_diff(r.entropy_coherent, r.entropy_target) < 1e-12);
  CHECK(rel_diff(r.entropy_boltzmann, 0.5 * r.entropy_target) < 1e-12);
}

TEST_CASE("report occupation does not depend on kappa") {
  const double A = 4.4e7;
  const EquivalenceReport r2 =
      coherent_equivalence_report(BlackHoleConfig::from_area(A, 4.0, 2.0, si));
  const EquivalenceReport r100 =
      coherent_equivalence_report(BlackHoleConfig::from_area(A, 4.0, 100.0, si));
  CHECK(r2.nbar == r100.nbar);
  CHECK(rel_diff(r2.log_states, r100.log_states) < 1e-12);
}

TEST_CASE("ln Q matches the coherent-state partition function") {
  const BlackHoleConfig cfg = BlackHoleConfig::from_mass(kSolarMassKg, 8.0, 3.0, si);
  const EquivalenceReport r = coherent_equivalence_report(cfg);
  CHECK(rel_diff(r.log_states, log_partition_function(r.nbar)) < 1e-14);
}

TEST_CASE("no overflow up to 1e12 solar masses") {
  const double M = 1e12 * kSolarMassKg;
  const double A = horizon_area(M, si);
  CHECK(std::isfinite(A));
  const BhEntropy s = bh_entropy(A, si);
  CHECK(std::isfinite(s.entropy_over_kB));
  CHECK(std::isfinite(s.entropy));
  CHECK(rel_diff(s.entropy_over_kB, 1e24 * bh_entropy(horizon_area(kSolarMassKg, si), si)
                                                .entropy_over_kB) < 1e-10);
  const EquivalenceReport r =
      coherent_equivalence_report(BlackHoleConfig::from_mass(M, 4.0, 2.0, si));
  CHECK(std::isfinite(r.log_states));
  CHECK(r.route1_matches);
}

TEST_CASE("mass and area round-trip") {
  const BlackHoleConfig from_m = BlackHoleConfig::from_mass(3.0 * kSolarMassKg, 4.0, 2.0, si);
  const BlackHoleConfig from_a = BlackHoleConfig::from_area(from_m.area, 4.0, 2.0, si);
  CHECK(rel_diff(from_a.mass, from_m.mass) < 1e-12);
  CHECK_THROWS_AS(BlackHoleConfig::from_area(0.0, 4.0, 2.0, si), std::domain_error);
  CHECK_THROWS_AS(BlackHoleConfig::from_mass(kSolarMassKg, 0.0, 2.0, si),
                  std::domain_error);
  CHECK_THROWS_AS(BlackHoleConfig::from_mass(kSolarMassKg, 4.0, 1.0, si),
                  std::domain_error);
}
