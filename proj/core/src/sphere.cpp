#include "ecc/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ecc/error.hpp"
#include "numeric.hpp"

namespace ecc {

Engine make_engine(RngSeed seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed.seed), static_cast<std::uint32_t>(seed.seed >> 32),
                    static_cast<std::uint32_t>(seed.stream),
                    static_cast<std::uint32_t>(seed.stream >> 32)};
  return Engine(seq);
}

double spherical_moment(int n, int k) {
  if (n < 1) fail(ErrorKind::InvalidInput, "spherical_moment: n must be >= 1");
  if (k < 0) fail(ErrorKind::InvalidInput, "spherical_moment: k must be >= 0");
  double result = 1.0;
  for (int j = 1; j <= k; ++j)
    result *= static_cast<double>(2 * j - 1) / static_cast<double>(n + 2 * j - 2);
  return result;
}

double complex_spherical_moment(int n, int k) {
  if (n < 1) fail(ErrorKind::InvalidInput, "complex_spherical_moment: n must be >= 1");
  if (k < 0) fail(ErrorKind::InvalidInput, "complex_spherical_moment: k must be >= 0");
  const auto a = static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(k) - 1;
  if (n + k <= 62) return 1.0 / static_cast<double>(detail::binomial_u64(a, k));
  boost::multiprecision::cpp_int b = 1;
  for (std::uint64_t i = 1; i <= static_cast<std::uint64_t>(k); ++i) b = b * (a - k + i) / i;
  return 1.0 / b.convert_to<double>();
}

double gaussian_norm_moment(int n, int k) {
  if (n < 1) fail(ErrorKind::InvalidInput, "gaussian_norm_moment: n must be >= 1");
  double result = 1.0;
  for (int j = 0; j < k; ++j) result *= static_cast<double>(n + 2 * j);
  return result;
}

namespace {

// Matchings only pair equal values, so the count depends on the multiset of
// value multiplicities alone. Pairing one occurrence of the first value with
// any of its (c - 1) partners leaves the same problem with c - 2 occurrences.
double count_pairings(std::vector<int> counts, std::map<std::vector<int>, double>& memo) {
  std::erase(counts, 0);
  if (counts.empty()) return 1.0;
  std::sort(counts.begin(), counts.end());
  if (auto it = memo.find(counts); it != memo.end()) return it->second;
  double result = 0.0;
  if (counts.front() >= 2) {
    auto rest = counts;
    rest.front() -= 2;
    result = static_cast<double>(counts.front() - 1) * count_pairings(rest, memo);
  }
  memo.emplace(std::move(counts), result);
  return result;
}

}  // namespace

double wick_pairing_count(std::span<const int> index) {
  std::map<int, int> by_value;
  for (int i : index) ++by_value[i];
  std::vector<int> counts;
  for (const auto& [value, c] : by_value) {
    if (c % 2 == 1) return 0.0;
    counts.push_back(c);
  }
  static std::mutex mutex;
  static std::map<std::vector<int>, double> memo;
  std::lock_guard lock(mutex);
  return count_pairings(std::move(counts), memo);
}

SymmetricTensor uniform_sphere_moment_tensor(int n, int degree) {
  if (degree < 0) fail(ErrorKind::InvalidInput, "uniform_sphere_moment_tensor: degree must be >= 0");
  if (degree == 0) return SymmetricTensor::scalar(1.0);
  SymmetricTensor t(n, degree);
  if (degree % 2 == 1) return t;
  const double denominator = gaussian_norm_moment(n, degree / 2);
  auto& coeffs = t.coefficients();
  std::size_t r = 0;
  t.for_each([&](std::span<const int> index, double) {
    coeffs[r++] = wick_pairing_count(index) / denominator;
  });
  return t;
}

void draw_real_sphere_point(Engine& engine, Eigen::Ref<Eigen::VectorXd> out) {
  std::normal_distribution<double> gauss;
  double norm = 0.0;
  do {
    for (Eigen::Index i = 0; i < out.size(); ++i) out(i) = gauss(engine);
    norm = out.norm();
  } while (norm == 0.0);
  out /= norm;
}

Eigen::MatrixXd sample_real_sphere(int n, Eigen::Index count, RngSeed seed) {
  if (n < 1) fail(ErrorKind::InvalidInput, "sample_real_sphere: n must be >= 1");
  if (count < 0) fail(ErrorKind::InvalidInput, "sample_real_sphere: count must be >= 0");
  Engine engine = make_engine(seed);
  Eigen::MatrixXd out(n, count);
  for (Eigen::Index j = 0; j < count; ++j) draw_real_sphere_point(engine, out.col(j));
  return out;
}

Eigen::MatrixXcd sample_complex_sphere(int n, Eigen::Index count, RngSeed seed) {
  if (n < 1) fail(ErrorKind::InvalidInput, "sample_complex_sphere: n must be >= 1");
  if (count < 0) fail(ErrorKind::InvalidInput, "sample_complex_sphere: count must be >= 0");
  Engine engine = make_engine(seed);
  std::normal_distribution<double> gauss;
  Eigen::MatrixXcd out(n, count);
  for (Eigen::Index j = 0; j < count; ++j) {
    double norm = 0.0;
    do {
      for (int i = 0; i < n; ++i) {
        const double re = gauss(engine);
        const double im = gauss(engine);
        out(i, j) = {re, im};
      }
      norm = out.col(j).norm();
    } while (norm == 0.0);
    out.col(j) /= norm;
  }
  return out;
}

Eigen::MatrixXcd sample_sphere(const SphereSpec& spec, Eigen::Index count, RngSeed seed) {
  if (spec.field == Field::Complex) return sample_complex_sphere(spec.dim, count, seed);
  return sample_real_sphere(spec.dim, count, seed).cast<std::complex<double>>();
}

MonteCarloEstimate mean_and_error(std::span<const double> values) {
  const auto count = static_cast<double>(values.size());
  if (values.size() < 2) fail(ErrorKind::InvalidInput, "need at least two samples");
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= count;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double variance = ss / (count - 1.0);
  return {mean, std::sqrt(variance / count)};
}

MonteCarloEstimate monte_carlo_moment(const SphereSpec& spec, int k, Eigen::Index samples,
                                      RngSeed seed) {
  if (samples < 2) fail(ErrorKind::InvalidInput, "monte_carlo_moment: samples must be >= 2");
  if (k < 0) fail(ErrorKind::InvalidInput, "monte_carlo_moment: k must be >= 0");
  std::vector<double> values(static_cast<std::size_t>(samples));
  if (spec.field == Field::Real) {
    const Eigen::MatrixXd theta = sample_real_sphere(spec.dim, samples, seed);
    for (Eigen::Index i = 0; i < samples; ++i)
      values[i] = detail::ipow(theta(0, i) * theta(0, i), k);
  } else {
    const Eigen::MatrixXcd theta = sample_complex_sphere(spec.dim, samples, seed);
    for (Eigen::Index i = 0; i < samples; ++i) values[i] = detail::ipow(std::norm(theta(0, i)), k);
  }
  return mean_and_error(values);
}

}  // namespace ecc
