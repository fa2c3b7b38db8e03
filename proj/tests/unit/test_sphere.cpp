#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "ecc/error.hpp"
#include "ecc/sphere.hpp"
#include "ecc/tensor.hpp"
#include "support/fuzz.hpp"
#include "support/oracles.hpp"

using namespace ecc;

TEST_CASE("spherical_moment examples") {
  CHECK(spherical_moment(2, 1) == doctest::Approx(0.5));
  for (int k = 0; k <= 10; ++k) CHECK(spherical_moment(1, k) == doctest::Approx(1.0));
  CHECK(spherical_moment(2, 3) == doctest::Approx(0.3125).epsilon(1e-15));
  CHECK(49.0 * spherical_moment(2, 3) == doctest::Approx(15.3125).epsilon(1e-15));
  CHECK(spherical_moment(7, 0) == 1.0);
  CHECK(spherical_moment(3, 2) == doctest::Approx(3.0 / 15.0));
  // huge orders stay finite
  CHECK(std::isfinite(spherical_moment(1000, 500)));
  CHECK(spherical_moment(1000, 500) > 0.0);
}

TEST_CASE("spherical_moment agrees with the Gaussian-integral ratio") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= 5; ++k) {
      const double ratio = oracle::gaussian_moment_1d(2 * k) / oracle::gaussian_norm_moment_gamma(n, k);
      CHECK(oracle::close_rel(spherical_moment(n, k), ratio, 1e-9));
      CHECK(oracle::close_rel(gaussian_norm_moment(n, k), oracle::gaussian_norm_moment_gamma(n, k), 1e-12));
    }
}

TEST_CASE("complex_spherical_moment examples") {
  for (int k = 0; k <= 10; ++k) CHECK(complex_spherical_moment(1, k) == 1.0);
  CHECK(complex_spherical_moment(2, 3) == 0.25);
  CHECK(49.0 * complex_spherical_moment(2, 3) == 12.25);
  CHECK(complex_spherical_moment(3, 2) == doctest::Approx(1.0 / 6.0));
  // big-integer branch: C(69, 30) exceeds 64 bits
  CHECK(oracle::close_rel(complex_spherical_moment(40, 30),
                          std::exp(std::lgamma(31.0) + std::lgamma(40.0) - std::lgamma(70.0)), 1e-12));
  // the two branches agree at the boundary
  CHECK(oracle::close_rel(complex_spherical_moment(32, 30),
                          std::exp(std::lgamma(31.0) + std::lgamma(32.0) - std::lgamma(62.0)), 1e-12));
}

TEST_CASE("monotonicity and domination") {
  for (int k = 1; k <= 6; ++k)
    for (int n = 1; n <= 8; ++n) CHECK(spherical_moment(n + 1, k) < spherical_moment(n, k));
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k <= 6; ++k) CHECK(spherical_moment(n, k + 1) < spherical_moment(n, k));
  for (int n = 2; n <= 8; ++n) {
    CHECK(spherical_moment(n, 1) == doctest::Approx(complex_spherical_moment(n, 1)).epsilon(1e-15));
    for (int k = 2; k <= 8; ++k) CHECK(spherical_moment(n, k) > complex_spherical_moment(n, k));
  }
}

TEST_CASE("Wick pairing counts match brute-force matching enumeration") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 6; ++k) {
      SymmetricTensor t(n, k);
      t.for_each([&](std::span<const int> idx, double) {
        std::vector<int> labels(idx.begin(), idx.end());
        CHECK(wick_pairing_count(idx) == static_cast<double>(oracle::brute_pairings(labels)));
      });
    }
}

TEST_CASE("Wick count total is (2k-1)!! n^k") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k) {
      SymmetricTensor t(n, 2 * k);
      double total = 0.0;
      t.for_each([&](std::span<const int> idx, double) {
        total += index_multiplicity(idx) * wick_pairing_count(idx);
      });
      double dfact = 1.0;
      for (int j = 1; j <= k; ++j) dfact *= 2 * j - 1;
      CHECK(total == dfact * std::pow(n, k));
    }
}

TEST_CASE("uniform moment tensor entries equal normalized Gaussian moments") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k) {
      const auto t = uniform_sphere_moment_tensor(n, 2 * k);
      t.for_each([&](std::span<const int> idx, double value) {
        std::map<int, int> counts;
        for (int i : idx) ++counts[i];
        double g = 1.0;
        for (const auto& [v, c] : counts) g *= oracle::gaussian_moment_1d(c);
        CHECK(value == doctest::Approx(g / oracle::gaussian_norm_moment_gamma(n, k)).epsilon(1e-9));
      });
    }
}

TEST_CASE("uniform_sphere_moment_tensor examples") {
  const auto t = uniform_sphere_moment_tensor(2, 2);
  CHECK(t.at(std::vector<int>{0, 0}) == doctest::Approx(0.5));
  CHECK(t.at(std::vector<int>{1, 1}) == doctest::Approx(0.5));
  CHECK(t.at(std::vector<int>{0, 1}) == 0.0);
  for (int n = 1; n <= 6; ++n) {
    const auto u = uniform_sphere_moment_tensor(n, 2);
    double trace = 0.0;
    for (int i = 0; i < n; ++i) trace += u.at(std::vector<int>{i, i});
    CHECK(trace == doctest::Approx(1.0));
  }
  const auto t4 = uniform_sphere_moment_tensor(2, 4);
  CHECK(tensor_inner(t4, t4) == doctest::Approx(3.0 / 8.0));
  CHECK(tensor_inner(t4, t4) == doctest::Approx(spherical_moment(2, 2)));
  const auto odd = uniform_sphere_moment_tensor(3, 3);
  for (double c : odd.coefficients()) CHECK(c == 0.0);
  CHECK_THROWS_AS(uniform_sphere_moment_tensor(200, 8), Error);
}

TEST_CASE("consistency: <M_uniform, v^(2k)> = spherical moment (fuzzed)") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = testing::uniform_int(rng, 1, 5);
    const int k = testing::uniform_int(rng, 1, 3);
    const auto v = testing::random_real_collection(rng, n, 1).real_vectors().col(0).eval();
    const double inner = tensor_inner(uniform_sphere_moment_tensor(n, 2 * k), power_tensor(v, 2 * k));
    CHECK(std::abs(inner - spherical_moment(n, k)) < 1e-9);
  }
}

TEST_CASE("sampling") {
  CHECK(sample_real_sphere(3, 0, {1, 0}).cols() == 0);
  CHECK(sample_sphere({3, Field::Complex}, 0, {1, 0}).cols() == 0);

  const auto a = sample_real_sphere(4, 50, {42, 3});
  const auto b = sample_real_sphere(4, 50, {42, 3});
  CHECK(a == b);
  const auto c = sample_real_sphere(4, 50, {42, 4});
  CHECK(a != c);
  const auto za = sample_complex_sphere(3, 20, {9, 0});
  CHECK(za == sample_complex_sphere(3, 20, {9, 0}));
  for (Eigen::Index j = 0; j < a.cols(); ++j) CHECK(std::abs(a.col(j).norm() - 1.0) < 1e-14);
  for (Eigen::Index j = 0; j < za.cols(); ++j) CHECK(std::abs(za.col(j).norm() - 1.0) < 1e-14);

  const auto big = sample_real_sphere(3, 100000, {7, 0});
  for (int i = 0; i < 3; ++i) {
    const double second = big.row(i).squaredNorm() / big.cols();
    CHECK(std::abs(second - 1.0 / 3.0) < 0.005);
  }
}

TEST_CASE("monte_carlo_moment examples") {
  const auto real = monte_carlo_moment({2, Field::Real}, 1, 100000, {17, 0});
  CHECK(std::abs(real.estimate - 0.5) <= 3.0 * real.std_error);
  const auto cx = monte_carlo_moment({2, Field::Complex}, 1, 100000, {17, 1});
  CHECK(std::abs(cx.estimate - 0.5) <= 3.0 * cx.std_error);
  const auto one = monte_carlo_moment({1, Field::Real}, 2, 1000, {3, 0});
  CHECK(one.estimate == 1.0);
  CHECK(one.std_error == 0.0);
  CHECK_THROWS_AS(monte_carlo_moment({2, Field::Real}, 1, 1, {}), Error);
}

TEST_CASE("monte_carlo_moment standard errors are calibrated") {
  // z-scores over independent seeds should look standard normal.
  for (Field field : {Field::Real, Field::Complex}) {
    const int n = 3, k = 2, seeds = 300;
    const double exact = field == Field::Real ? spherical_moment(n, k) : complex_spherical_moment(n, k);
    double sum_z = 0.0, sum_z2 = 0.0;
    for (int s = 0; s < seeds; ++s) {
      const auto mc = monte_carlo_moment({n, field}, k, 5'000, {static_cast<std::uint64_t>(s), 17});
      const double z = (mc.estimate - exact) / mc.std_error;
      sum_z += z;
      sum_z2 += z * z;
    }
    CHECK(std::abs(sum_z / seeds) < 0.25);
    CHECK(sum_z2 / seeds == doctest::Approx(1.0).epsilon(0.25));
  }
}
