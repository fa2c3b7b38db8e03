#include "ecc/series.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ecc/error.hpp"

namespace ecc {

PowerSeries::PowerSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) fail(ErrorKind::InvalidInput, "power series needs at least one coefficient");
  for (double c : coeffs_)
    if (!std::isfinite(c)) fail(ErrorKind::InvalidInput, "power series coefficients must be finite");
}

PowerSeries PowerSeries::polynomial(std::vector<double> coeffs, int order) {
  if (order < 0) fail(ErrorKind::InvalidInput, "order must be >= 0");
  if (static_cast<int>(coeffs.size()) > order + 1)
    fail(ErrorKind::InvalidInput, "polynomial degree exceeds requested order");
  coeffs.resize(static_cast<std::size_t>(order) + 1, 0.0);
  return PowerSeries(std::move(coeffs));
}

double PowerSeries::evaluate(double t) const {
  double sum = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) sum = sum * t + *it;
  return sum;
}

PowerSeries PowerSeries::truncated(int order) const {
  if (order < 0 || order > this->order())
    fail(ErrorKind::InvalidInput, "cannot truncate to order " + std::to_string(order));
  return PowerSeries(std::vector<double>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j) c[i + j] += a[i] * b[j];
  return PowerSeries(std::move(c));
}

PowerSeries series_arccos(int order) {
  if (order < 1) fail(ErrorKind::InvalidInput, "series_arccos: order must be >= 1");
  std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
  c[0] = std::numbers::pi / 2.0;
  // central binomial ratio (2k)! / (4^k (k!)^2), built multiplicatively
  double central = 1.0;
  for (int k = 0; 2 * k + 1 <= order; ++k) {
    if (k > 0) central *= static_cast<double>(2 * k - 1) / static_cast<double>(2 * k);
    c[2 * k + 1] = -central / static_cast<double>(2 * k + 1);
  }
  return PowerSeries(std::move(c));
}

PowerSeries series_pow(const PowerSeries& f, double alpha, int order) {
  if (order < 0) fail(ErrorKind::InvalidInput, "series_pow: order must be >= 0");
  if (order > f.order())
    fail(ErrorKind::InvalidInput, "series_pow: requested order " + std::to_string(order) +
                                      " exceeds the input truncation order " +
                                      std::to_string(f.order()));
  const double f0 = f[0];
  if (!(f0 > 0.0))
    fail(ErrorKind::SingularExpansion, "series_pow: constant term must be positive");
  if (alpha == 1.0) return f.truncated(order);
  std::vector<double> g(static_cast<std::size_t>(order) + 1, 0.0);
  g[0] = std::pow(f0, alpha);
  for (int m = 1; m <= order; ++m) {
    double acc = 0.0;
    for (int j = 1; j <= m; ++j) acc += (j * alpha - (m - j)) * f[j] * g[m - j];
    g[m] = acc / (m * f0);
  }
  return PowerSeries(std::move(g));
}

PowerSeries arccos_power_series(double delta, int order) {
  if (!(delta > 0.0)) fail(ErrorKind::InvalidInput, "arccos_power_series: delta must be > 0");
  return series_pow(series_arccos(std::max(order, 1)), delta, order);
}

PowerSeries chord_power_series(double delta, int order) {
  if (!(delta > 0.0)) fail(ErrorKind::InvalidInput, "chord_power_series: delta must be > 0");
  return series_pow(PowerSeries::polynomial({2.0, -2.0}, std::max(order, 1)), delta / 2.0, order);
}

std::string_view to_string(SignReport::Hypothesis h) noexcept {
  switch (h) {
    case SignReport::Hypothesis::AlphaInUnitInterval: return "0 < alpha < 1";
    case SignReport::Hypothesis::PositiveConstant: return "f_0 > 0";
    case SignReport::Hypothesis::NegativeSlope: return "f_1 < 0";
    case SignReport::Hypothesis::NonPositiveHigher: return "f_k <= 0 for k >= 2";
  }
  return "unknown";
}

SignReport verify_sign_lemma(const PowerSeries& f, double alpha, int order) {
  SignReport report;
  using H = SignReport::Hypothesis;
  if (order < 1 || order > f.order())
    fail(ErrorKind::InvalidInput, "verify_sign_lemma: order must lie in [1, f.order()]");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    report.failed_hypothesis = H::AlphaInUnitInterval;
    return report;
  }
  if (!(f[0] > 0.0)) {
    report.failed_hypothesis = H::PositiveConstant;
    report.violation_index = 0;
    return report;
  }
  if (!(f[1] < 0.0)) {
    report.failed_hypothesis = H::NegativeSlope;
    report.violation_index = 1;
    return report;
  }
  for (int k = 2; k <= order; ++k) {
    if (f[k] > 0.0) {
      report.failed_hypothesis = H::NonPositiveHigher;
      report.violation_index = k;
      return report;
    }
  }
  report.coefficients = series_pow(f, alpha, order).coeffs();
  for (int k = 1; k <= order; ++k) {
    if (!(report.coefficients[k] < 0.0)) {
      report.violation_index = k;
      break;
    }
  }
  return report;
}

double tail_bound(const PowerSeries& f, double value_at_one) {
  bool has_negative = false;
  bool has_positive = false;
  for (int k = 1; k <= f.order(); ++k) {
    has_negative |= f[k] < 0.0;
    has_positive |= f[k] > 0.0;
  }
  if (has_negative && has_positive)
    fail(ErrorKind::InvalidInput, "tail_bound: coefficients c_1.. must share one sign");
  double partial = 0.0;
  for (double c : f.coeffs()) partial += c;
  // Same-sign coefficients make the partial sums monotone towards f(1).
  const double tail = has_positive ? value_at_one - partial : partial - value_at_one;
  if (tail < -1e-12)
    fail(ErrorKind::InvalidInput, "tail_bound: reference value is on the wrong side of the partial sum");
  return std::max(tail, 0.0);
}

}  // namespace ecc
