#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ecc/error.hpp"
#include "ecc/series.hpp"
#include "support/oracles.hpp"

using namespace ecc;
using oracle::Big;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

std::function<Big(Big)> arccos_pow(double delta) {
  return [delta](Big t) { return pow(acos(t), Big(delta)); };
}

}  // namespace

TEST_CASE("series_arccos coefficients") {
  const auto a = series_arccos(7);
  CHECK(a.order() == 7);
  CHECK(a[0] == doctest::Approx(kHalfPi));
  CHECK(a[1] == doctest::Approx(-1.0));
  CHECK(a[3] == doctest::Approx(-1.0 / 6.0));
  CHECK(a[5] == doctest::Approx(-3.0 / 40.0));
  CHECK(a[7] == doctest::Approx(-5.0 / 112.0));
  CHECK(a[2] == 0.0);
  CHECK(a[4] == 0.0);
  CHECK(a[6] == 0.0);
  CHECK(a.evaluate(0.0) == kHalfPi);
  // binomial-series oracle: arcsin' = (1 - t^2)^{-1/2} = sum C(-1/2, k) (-t^2)^k
  const auto b = series_arccos(41);
  for (int k = 0; 2 * k + 1 <= 41; ++k) {
    const double expect = -oracle::gen_binomial(-0.5, k) * (k % 2 == 0 ? 1.0 : -1.0) / (2 * k + 1);
    CHECK(b[2 * k + 1] == doctest::Approx(expect).epsilon(1e-13));
  }
  for (int order = 1; order <= 5; ++order)
    CHECK(oracle::close_rel(b[order], oracle::fd_taylor_coefficient(arccos_pow(1.0), order), 1e-5, 1e-12));
  CHECK_THROWS_AS(series_arccos(0), Error);
}

TEST_CASE("series_pow examples") {
  const auto sq = series_pow(PowerSeries::polynomial({1, 1}, 3), 2.0, 3);
  CHECK(sq.coeffs() == std::vector<double>{1, 2, 1, 0});

  const auto root = series_pow(PowerSeries::polynomial({2, -2}, 20), 0.5, 20);
  for (int k = 0; k <= 20; ++k) {
    const double expect = std::sqrt(2.0) * oracle::gen_binomial(0.5, k) * (k % 2 == 0 ? 1.0 : -1.0);
    CHECK(root[k] == doctest::Approx(expect).epsilon(1e-13));
  }
  CHECK(root[1] == doctest::Approx(-std::sqrt(2.0) / 2));
  CHECK(root[2] == doctest::Approx(-std::sqrt(2.0) / 8));
  CHECK(root[3] == doctest::Approx(-std::sqrt(2.0) / 16));

  const auto inv = series_pow(PowerSeries::polynomial({1, 1}, 10), -1.0, 10);
  for (int k = 0; k <= 10; ++k) CHECK(inv[k] == doctest::Approx(k % 2 == 0 ? 1.0 : -1.0));
}

TEST_CASE("series_pow errors") {
  try {
    (void)series_pow(PowerSeries::polynomial({0, 1}, 3), 0.5, 3);
    FAIL("expected singular expansion");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularExpansion);
  }
  CHECK_THROWS_AS(series_pow(PowerSeries::polynomial({-1, 1}, 3), 0.5, 3), Error);
  // never extends beyond the input truncation
  CHECK_THROWS_AS(series_pow(series_arccos(5), 0.5, 6), Error);
  CHECK_THROWS_AS(PowerSeries(std::vector<double>{}), Error);
  CHECK_THROWS_AS(PowerSeries(std::vector<double>{1.0, NAN}), Error);
}

TEST_CASE("series_pow identities (fuzzed)") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> c(16);
    c[0] = 0.5 + std::abs(u(rng)) * 2.0;
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = u(rng) / static_cast<double>(i);
    const PowerSeries f(c);
    const double alpha = 3.0 * u(rng);
    const auto product = series_pow(f, alpha, 15) * series_pow(f, -alpha, 15);
    CHECK(product[0] == doctest::Approx(1.0).epsilon(1e-12));
    for (int k = 1; k <= 15; ++k) CHECK(std::abs(product[k]) < 1e-9);
    CHECK(series_pow(f, 1.0, 15).coeffs() == f.coeffs());
  }
}

TEST_CASE("arccos_power_series") {
  CHECK(arccos_power_series(1.0, 20).coeffs() == series_arccos(20).coeffs());

  const auto half = arccos_power_series(0.5, 30);
  CHECK(half[0] == doctest::Approx(std::sqrt(kHalfPi)));
  for (int k = 1; k <= 30; ++k) CHECK(half[k] < 0.0);
  CHECK(oracle::close_rel(half[1], oracle::fd_taylor_coefficient(arccos_pow(0.5), 1), 1e-5));
  CHECK(oracle::close_rel(half[2], oracle::fd_taylor_coefficient(arccos_pow(0.5), 2), 1e-5));

  const auto sq = arccos_power_series(2.0, 4);
  // arccos^2 = pi^2/4 - pi t + t^2 + ...
  CHECK(sq[1] == doctest::Approx(-std::numbers::pi));
  CHECK(sq[2] == doctest::Approx(1.0));
  CHECK(sq[2] > 0.0);
  CHECK(oracle::close_rel(sq[2], oracle::fd_taylor_coefficient(arccos_pow(2.0), 2), 1e-5));
  CHECK_THROWS_AS(arccos_power_series(0.0, 4), Error);
}

TEST_CASE("finite-difference agreement for arccos^delta through order 5") {
  for (double delta : {0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0}) {
    const auto s = arccos_power_series(delta, 5);
    for (int order = 1; order <= 5; ++order) {
      const double fd = oracle::fd_taylor_coefficient(arccos_pow(delta), order);
      CAPTURE(delta);
      CAPTURE(order);
      CHECK(oracle::close_rel(s[order], fd, 1e-5, 1e-12));
    }
  }
}

TEST_CASE("chord_power_series") {
  const auto c = chord_power_series(1.0, 3);
  CHECK(c[0] == doctest::Approx(std::sqrt(2.0)));
  CHECK(c[1] == doctest::Approx(-0.70711).epsilon(1e-5));
  CHECK(c[2] == doctest::Approx(-0.17678).epsilon(1e-4));
  CHECK(c[3] == doctest::Approx(-0.08839).epsilon(1e-4));
  // delta = 2 is the polynomial 2 - 2t
  const auto two = chord_power_series(2.0, 5);
  CHECK(two.coeffs() == std::vector<double>{2, -2, 0, 0, 0, 0});
}

TEST_CASE("verify_sign_lemma examples") {
  const auto chord = verify_sign_lemma(PowerSeries::polynomial({2, -2}, 30), 0.9, 30);
  CHECK(chord.hypotheses_hold());
  CHECK(chord.conclusion_holds());
  CHECK(chord.coefficients.size() == 31);

  const auto arc = verify_sign_lemma(series_arccos(40), 0.7, 40);
  CHECK(arc.conclusion_holds());

  const auto bad = verify_sign_lemma(PowerSeries::polynomial({1, 1}, 5), 0.5, 5);
  REQUIRE(bad.failed_hypothesis.has_value());
  CHECK(*bad.failed_hypothesis == SignReport::Hypothesis::NegativeSlope);
  CHECK_FALSE(bad.conclusion_holds());
  CHECK(bad.coefficients.empty());

  CHECK(*verify_sign_lemma(series_arccos(5), 1.5, 5).failed_hypothesis ==
        SignReport::Hypothesis::AlphaInUnitInterval);
  CHECK(*verify_sign_lemma(PowerSeries::polynomial({1, -1, 0.1}, 5), 0.5, 5).failed_hypothesis ==
        SignReport::Hypothesis::NonPositiveHigher);
  CHECK(*verify_sign_lemma(PowerSeries::polynomial({0, -1}, 5), 0.5, 5).failed_hypothesis ==
        SignReport::Hypothesis::PositiveConstant);
}

TEST_CASE("sign lemma holds on fuzzed hypothesis-satisfying inputs") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int violations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> c(41, 0.0);
    c[0] = 0.1 + 3.0 * u(rng);
    c[1] = -(0.01 + 2.0 * u(rng));
    for (int k = 2; k <= 40; ++k) c[k] = u(rng) < 0.4 ? 0.0 : -u(rng) / k;
    const double alpha = 0.01 + 0.98 * u(rng);
    const auto report = verify_sign_lemma(PowerSeries(c), alpha, 40);
    REQUIRE(report.hypotheses_hold());
    violations += report.conclusion_holds() ? 0 : 1;
  }
  CHECK(violations == 0);
}

TEST_CASE("tail_bound") {
  const auto a = series_arccos(2000);
  const double tail = tail_bound(a, 0.0);
  CHECK(tail >= 0.0);
  CHECK(tail <= 2e-2);
  // direct partial-sum oracle
  double partial = 0.0;
  for (double c : a.coeffs()) partial += c;
  CHECK(tail == doctest::Approx(partial));

  CHECK(tail_bound(PowerSeries::polynomial({3.5}, 10), 3.5) == 0.0);

  double previous = INFINITY;
  for (int order : {50, 100, 250, 500, 1000}) {
    const double t = tail_bound(chord_power_series(1.0, order), 0.0);
    CHECK(t < previous);
    CHECK(t == doctest::Approx(std::abs(chord_power_series(1.0, order).partial_sum())));
    previous = t;
  }

  CHECK_THROWS_AS(tail_bound(PowerSeries::polynomial({1, 1, -1}, 3), 1.0), Error);
  // reference on the wrong side of the partial sums
  CHECK_THROWS_AS(tail_bound(series_arccos(10), 1.0), Error);
}

TEST_CASE("partial sums at t = 1 decrease monotonically to the closed form") {
  for (double delta : {0.25, 0.5, 0.75}) {
    const auto s = arccos_power_series(delta, 400);
    double partial = s[0];
    for (int k = 1; k <= 400; ++k) {
      const double next = partial + s[k];
      CHECK(next < partial);
      CHECK(next > 0.0);  // arccos(1)^delta = 0
      partial = next;
    }
  }
  // at t = -1 the signed partial sums approach arccos(-1)^delta = pi^delta
  const auto s = arccos_power_series(0.5, 4000);
  CHECK(std::abs(s.evaluate(-1.0) - std::sqrt(std::numbers::pi)) < 5e-3);
}
