#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace ecc {

/// Taylor coefficients c_0..c_N of a function at 0, truncated at order N.
/// Coefficients past N are unknown; no operation manufactures them.
class PowerSeries {
 public:
  /// Throws InvalidInput for an empty or non-finite coefficient list.
  explicit PowerSeries(std::vector<double> coeffs);

  /// An exact polynomial, zero-padded up to `order`.
  static PowerSeries polynomial(std::vector<double> coeffs, int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  double operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }

  /// Sum of c_k t^k for k = 0..N.
  double evaluate(double t) const;
  /// Sum of c_k for k = 0..N.
  double partial_sum() const { return evaluate(1.0); }

  /// First `order + 1` coefficients.
  PowerSeries truncated(int order) const;

 private:
  std::vector<double> coeffs_;
};

/// Cauchy product truncated at the smaller of the two orders.
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

/// arccos(t) = pi/2 - sum_k (2k)! / (4^k (k!)^2 (2k+1)) t^{2k+1}.
PowerSeries series_arccos(int order);

/// Coefficients of f(t)^alpha from the recurrence implied by F' f = alpha f' F:
///   g_0 = f_0^alpha,
///   g_m = 1/(m f_0) sum_{j=1}^{m} (j alpha - (m - j)) f_j g_{m-j}.
/// Requires f_0 > 0 (SingularExpansion otherwise) and order <= f.order().
PowerSeries series_pow(const PowerSeries& f, double alpha, int order);

/// arccos(t)^delta at 0.
PowerSeries arccos_power_series(double delta, int order);

/// (2 - 2t)^{delta/2}, the chord length ||x - y||^delta as a function of <x, y>.
PowerSeries chord_power_series(double delta, int order);

/// Outcome of checking that all derivatives of f^alpha at 0 are negative.
struct SignReport {
  enum class Hypothesis {
    AlphaInUnitInterval,   // 0 < alpha < 1
    PositiveConstant,      // f_0 > 0
    NegativeSlope,         // f_1 < 0
    NonPositiveHigher,     // f_k <= 0 for k >= 2
  };

  /// First hypothesis found to fail; when set, nothing is concluded.
  std::optional<Hypothesis> failed_hypothesis;
  /// Index of the hypothesis violation (f_k) or conclusion violation (g_k).
  std::optional<int> violation_index;
  /// Coefficients of f^alpha; empty when a hypothesis failed.
  std::vector<double> coefficients;

  bool hypotheses_hold() const noexcept { return !failed_hypothesis.has_value(); }
  bool conclusion_holds() const noexcept {
    return hypotheses_hold() && !violation_index.has_value();
  }
};

std::string_view to_string(SignReport::Hypothesis h) noexcept;

SignReport verify_sign_lemma(const PowerSeries& f, double alpha, int order);

/// Truncation residual at t = 1 for a series whose coefficients c_1, c_2, ...
/// share one sign: |f(1) - sum_{k<=N} c_k|, which bounds sum_{k>N} |c_k| t^k
/// on [-1, 1]. `value_at_one` is f(1) from the closed form. Throws InvalidInput
/// if the coefficients change sign or the reference is inconsistent with the
/// partial sums by more than 1e-12.
double tail_bound(const PowerSeries& f, double value_at_one);

}  // namespace ecc
