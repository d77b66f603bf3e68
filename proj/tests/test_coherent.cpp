#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "cstherm/coherent.hpp"
#include "cstherm/kahan.hpp"
#include "cstherm/verification.hpp"
#include "test_util.hpp"

using namespace cstherm;
using cstherm::test::rel_diff;
using cstherm::test::Rng;

namespace {

OscillatorConfig natural_cfg(double mass = 1.0, double omega = 1.0) {
  return OscillatorConfig(mass, omega, ConstantsSet::natural());
}

double weight_sum(const FockWeights& fw) {
  KahanAccumulator acc;
  for (double w : fw.weights) acc.add(w);
  return acc.total();
}

}  // namespace

TEST_CASE("oscillator config validation") {
  CHECK_THROWS_AS(OscillatorConfig(0.0, 1.0, ConstantsSet::natural()), std::domain_error);
  CHECK_THROWS_AS(OscillatorConfig(1.0, -2.0, ConstantsSet::natural()), std::domain_error);
}

TEST_CASE("occupation from amplitude") {
  const OscillatorConfig cfg = natural_cfg(1.0, 2.0);
  CHECK(occupation_from_amplitude(cfg, {0.0, 0.0}) == 0.0);
  CHECK(occupation_from_amplitude(cfg, {1.0, 0.0}) == 1.0);

  // cached nbar recomputes bit-for-bit
  const CoherentAmplitude amp = CoherentAmplitude::from_displacement(cfg, {0.3, -1.2});
  CHECK(amp.nbar == occupation_from_amplitude(cfg, amp.d));
}

TEST_CASE("occupation equals the Fock-sum mean") {
  Rng rng(101);
  for (int i = 0; i < 10; ++i) {
    const OscillatorConfig cfg(rng.uniform(0.2, 5.0), rng.uniform(0.2, 5.0),
                               ConstantsSet::natural());
    const std::complex<double> d{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    const double nbar = occupation_from_amplitude(cfg, d);
    CHECK(rel_diff(nbar, fock_sum_oracle(cfg, nbar, FockObservable::MeanN)) < 1e-10);
  }
}

TEST_CASE("occupation is phase invariant") {
  const OscillatorConfig cfg = natural_cfg(0.7, 1.9);
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    const double mag = rng.uniform(0.0, 4.0);
    const double phase1 = rng.uniform(0.0, 6.28318);
    const double phase2 = rng.uniform(0.0, 6.28318);
    const std::complex<double> d1 = std::polar(mag, phase1);
    const std::complex<double> d2 = std::polar(mag, phase2);
    CHECK(rel_diff(occupation_from_amplitude(cfg, d1),
                   occupation_from_amplitude(cfg, d2)) < 1e-14);
  }
}

TEST_CASE("fock weights vacuum") {
  const FockWeights fw = fock_weights(0.0);
  CHECK(fw.weights.size() == 1);
  CHECK(fw.weights[0] == 1.0);
  CHECK(fw.n_max() == 0);
}

TEST_CASE("fock weights ground weight at nbar = 1") {
  const FockWeights fw = fock_weights(1.0);
  CHECK(std::abs(fw.weights[0] - 0.3678794412) < 1e-9);
  CHECK(rel_diff(fw.weights[0], 0.36787944117144233) < 1e-15);
}

TEST_CASE("fock weights tail mass at nbar = 30") {
  const FockWeights fw = fock_weights(30.0, 1e-12);
  CHECK(std::abs(1.0 - weight_sum(fw)) < 1e-12);
}

TEST_CASE("fock weights normalization across scales") {
  for (double nbar : {0.1, 1.0, 10.0, 100.0}) {
    const FockWeights fw = fock_weights(nbar, 1e-12);
    CHECK(std::abs(1.0 - weight_sum(fw)) < 1e-12);
    for (double w : fw.weights) {
      CHECK(w >= 0.0);
      CHECK(w <= 1.0);
    }
  }
}

TEST_CASE("fock weights follow the Poisson recurrence") {
  const FockWeights fw = fock_weights(5.0, 1e-12);
  for (int n = 0; n + 1 <= fw.n_max(); ++n) {
    const double expected = fw.weights[n] * 5.0 / (n + 1);
    if (expected == 0.0) continue;
    CHECK(rel_diff(fw.weights[n + 1], expected) < 1e-15);
  }
}

TEST_CASE("fock weights Poisson mean and variance") {
  for (double nbar : {0.1, 1.0, 10.0, 100.0}) {
    const FockWeights fw = fock_weights(nbar, 1e-12);
    KahanAccumulator mean, var;
    for (int n = 0; n <= fw.n_max(); ++n) {
      mean.add(n * fw.weights[n]);
      var.add((n - nbar) * (n - nbar) * fw.weights[n]);
    }
    CHECK(rel_diff(mean.total(), nbar) < 1e-8);
    CHECK(rel_diff(var.total(), nbar) < 1e-8);
  }
}

TEST_CASE("fock weights in the log-space regime") {
  // nbar beyond 700 underflows e^{-nbar}; weights must still normalize
  const FockWeights fw = fock_weights(1000.0, 1e-12);
  CHECK(std::abs(1.0 - weight_sum(fw)) < 1e-10);

  KahanAccumulator mean;
  for (int n = 0; n <= fw.n_max(); ++n) mean.add(n * fw.weights[n]);
  CHECK(rel_diff(mean.total(), 1000.0) < 1e-8);
}

TEST_CASE("fock weights agree across the log-space boundary") {
  for (double nbar : {699.0, 700.0, 701.0, 702.0}) {
    const FockWeights fw = fock_weights(nbar, 1e-12);
    CHECK(std::abs(1.0 - weight_sum(fw)) < 1e-11);
    KahanAccumulator mean;
    for (int n = 0; n <= fw.n_max(); ++n) mean.add(n * fw.weights[n]);
    CHECK(rel_diff(mean.total(), nbar) < 1e-9);
  }
}

TEST_CASE("fock weights at nbar = 1e6 stay finite") {
  const FockWeights fw = fock_weights(1e6, 1e-9);
  CHECK(std::abs(1.0 - weight_sum(fw)) < 1e-9);
  for (double w : fw.weights) CHECK(std::isfinite(w));
}

TEST_CASE("fock weights validation") {
  CHECK_THROWS_AS((void)fock_weights(-0.5), std::domain_error);
  CHECK_THROWS_AS((void)fock_weights(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS((void)fock_weights(1.0, 1.0), std::domain_error);
}

TEST_CASE("overlap of a state with itself is one") {
  const OscillatorConfig cfg = natural_cfg(1.3, 0.8);
  const std::complex<double> d{0.4, -2.1};
  CHECK(overlap_sq(cfg, d, d) == 1.0);
}

TEST_CASE("vacuum overlap is the reciprocal partition function") {
  const OscillatorConfig cfg = natural_cfg(1.0, 2.0);
  const std::complex<double> d{1.1, 0.7};
  const double nbar = occupation_from_amplitude(cfg, d);
  CHECK(rel_diff(overlap_sq(cfg, d, {0.0, 0.0}), std::exp(-nbar)) < 1e-14);
  CHECK(rel_diff(std::exp(log_partition_function(nbar)) * overlap_sq(cfg, d, {0.0, 0.0}),
                 1.0) < 1e-12);
}

TEST_CASE("overlap is symmetric and lies in (0, 1]") {
  const OscillatorConfig cfg = natural_cfg(0.9, 1.4);
  Rng rng(23);
  for (int i = 0; i < 30; ++i) {
    const std::complex<double> d{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    const std::complex<double> f{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    const double df = overlap_sq(cfg, d, f);
    CHECK(df == overlap_sq(cfg, f, d));
    CHECK(df > 0.0);
    CHECK(df <= 1.0);
    if (d != f) CHECK(df < 1.0);
  }
}

TEST_CASE("log partition function") {
  CHECK(log_partition_function(0.0) == 0.0);
  CHECK(log_partition_function(1.0) == 1.0);
  CHECK(log_partition_function(1e6) == 1e6);
  CHECK_THROWS_AS((void)log_partition_function(-1.0), std::domain_error);
}

TEST_CASE("mean energy") {
  const OscillatorConfig cfg = natural_cfg();
  CHECK(mean_energy(cfg, 0.0) == 0.5);  // zero-point energy hbar omega / 2
  CHECK(mean_energy(cfg, 2.0) == 2.5);
  CHECK_THROWS_AS((void)mean_energy(cfg, -1.0), std::domain_error);
}

TEST_CASE("mean energy matches the truncated Fock sum") {
  Rng rng(31);
  for (int i = 0; i < 10; ++i) {
    const OscillatorConfig cfg(rng.uniform(0.3, 4.0), rng.uniform(0.3, 4.0),
                               ConstantsSet::natural());
    const double nbar = rng.uniform(0.0, 100.0);
    CHECK(rel_diff(mean_energy(cfg, nbar),
                   fock_sum_oracle(cfg, nbar, FockObservable::Energy)) < 1e-9);
  }
}
