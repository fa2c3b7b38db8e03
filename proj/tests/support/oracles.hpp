#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the library code paths it is compared against.

#include <cmath>
#include <functional>
#include <map>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <Eigen/Dense>

namespace ecc::oracle {

/// All n^k index tuples, in odometer order.
inline std::vector<std::vector<int>> all_tuples(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(k), 0);
  while (true) {
    out.push_back(t);
    int p = 0;
    while (p < k && ++t[p] == n) t[p++] = 0;
    if (p == k) break;
  }
  return out;
}

/// Dense n^k moment tensor sum_i w_i x_i^{(x)k}.
inline std::vector<double> dense_moment(const Eigen::MatrixXd& x, const Eigen::VectorXd& w, int k) {
  const auto tuples = all_tuples(static_cast<int>(x.rows()), k);
  std::vector<double> out(tuples.size(), 0.0);
  for (std::size_t t = 0; t < tuples.size(); ++t)
    for (Eigen::Index i = 0; i < x.cols(); ++i) {
      double p = w(i);
      for (int idx : tuples[t]) p *= x(idx, i);
      out[t] += p;
    }
  return out;
}

inline double dense_inner(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Number of perfect matchings of positions 0..k-1 pairing equal labels,
/// by explicit enumeration of all (k-1)!! matchings.
inline long long brute_pairings(const std::vector<int>& labels) {
  std::function<long long(std::vector<int>)> rec = [&](std::vector<int> open) -> long long {
    if (open.empty()) return 1;
    if (open.size() % 2 == 1) return 0;
    const int first = open[0];
    long long total = 0;
    for (std::size_t j = 1; j < open.size(); ++j) {
      if (labels[first] != labels[open[j]]) continue;
      std::vector<int> rest;
      for (std::size_t q = 1; q < open.size(); ++q)
        if (q != j) rest.push_back(open[q]);
      total += rec(rest);
    }
    return total;
  };
  std::vector<int> positions(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) positions[i] = static_cast<int>(i);
  return rec(positions);
}

/// E[gamma^p] for a standard normal gamma, by composite Simpson on [-14, 14].
inline double gaussian_moment_1d(int p) {
  const int steps = 20000;
  const double a = -14.0, b = 14.0, h = (b - a) / steps;
  auto f = [p](double x) { return std::pow(x, p) * std::exp(-x * x / 2.0); };
  double s = f(a) + f(b);
  for (int i = 1; i < steps; ++i) s += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return s * h / 3.0 / std::sqrt(2.0 * boost::math::constants::pi<double>());
}

/// E||g||^{2j} for g standard normal in R^n, from the Gamma-function form.
inline double gaussian_norm_moment_gamma(int n, int j) {
  return std::pow(2.0, j) * std::exp(std::lgamma(n / 2.0 + j) - std::lgamma(n / 2.0));
}

/// Generalized binomial coefficient C(alpha, k) by direct product.
inline double gen_binomial(double alpha, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= (alpha - i) / (i + 1);
  return r;
}

using Big = boost::multiprecision::cpp_bin_float_50;

/// Taylor coefficient f^{(order)}(0) / order! from central differences with
/// step h, evaluated in 50-digit arithmetic and Richardson-extrapolated once.
inline double fd_taylor_coefficient(const std::function<Big(Big)>& f, int order, double step = 1e-3) {
  auto central = [&](Big h) {
    // order-th central difference: sum_j (-1)^j C(order, j) f((order/2 - j) h)
    Big sum = 0;
    Big binom = 1;
    for (int j = 0; j <= order; ++j) {
      const Big x = (Big(order) / 2 - j) * h;
      sum += ((j % 2 == 0) ? binom : -binom) * f(x);
      binom = binom * (order - j) / (j + 1);
    }
    return sum / pow(h, order);
  };
  const Big h = step;
  const Big d1 = central(h);
  const Big d2 = central(h / 2);
  const Big richardson = (4 * d2 - d1) / 3;
  Big fact = 1;
  for (int i = 2; i <= order; ++i) fact *= i;
  return static_cast<double>(richardson / fact);
}

inline bool close_rel(double a, double b, double rel, double abs_floor = 0.0) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)) + abs_floor;
}

}  // namespace ecc::oracle
