#pragma once

#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "ecc/collection.hpp"
#include "ecc/series.hpp"
#include "ecc/sphere.hpp"

namespace ecc {

/// Probability measure on S^{n-1} with finite support.
class DiscreteMeasure {
 public:
  /// Requires a real collection; its weights become the measure's weights.
  explicit DiscreteMeasure(UnitVectorCollection points);

  static DiscreteMeasure point_mass(const Eigen::VectorXd& p);
  /// (delta_p + delta_{-p}) / 2.
  static DiscreteMeasure antipodal(const Eigen::VectorXd& p);

  /// Appends -x_i for every support point and halves all weights.
  DiscreteMeasure symmetrized() const;

  const UnitVectorCollection& points() const noexcept { return points_; }
  const Eigen::MatrixXd& support() const { return points_.real_vectors(); }
  const Eigen::VectorXd& weights() const noexcept { return points_.weights(); }
  int dim() const noexcept { return static_cast<int>(points_.dim()); }

 private:
  UnitVectorCollection points_;
};

enum class EnergyKind { Geodesic, Euclidean };
enum class EnergyMethod { ClosedForm, PairwiseSum, MonteCarlo, Series };

std::string_view to_string(EnergyKind kind) noexcept;
std::string_view to_string(EnergyMethod method) noexcept;

struct EnergyResult {
  double value = 0.0;
  EnergyMethod method = EnergyMethod::PairwiseSum;
  /// Standard error for Monte Carlo, certified tail for series, 0 otherwise.
  double error_bound = 0.0;
};

/// Exponent at which the maximizer switches from the uniform measure to an
/// antipodal pair: 1 for geodesic, 2 for Euclidean distance.
double critical_exponent(EnergyKind kind) noexcept;

/// d(x, y)^delta as a function of t = <x, y>: arccos(t)^delta or (2 - 2t)^{delta/2}.
double distance_kernel(EnergyKind kind, double delta, double t);

/// sum_{i,j} w_i w_j arccos(<x_i, x_j>)^delta, inner products clamped to [-1, 1].
EnergyResult geodesic_energy(const DiscreteMeasure& mu, double delta);

/// sum_{i,j} w_i w_j ||x_i - x_j||^delta.
EnergyResult euclidean_energy(const DiscreteMeasure& mu, double delta);

EnergyResult energy(const DiscreteMeasure& mu, EnergyKind kind, double delta);

/// Monte Carlo energy of the uniform measure on S^{n-1} from `samples`
/// independent pairs; error_bound is the standard error.
EnergyResult uniform_energy(int n, EnergyKind kind, double delta, Eigen::Index samples,
                            RngSeed seed);

/// a_0 + sum_{k=1}^N c_k E<X, X'>^k for F = sum c_k t^k, where the moments are
/// polynomial energies of mu. error_bound is `tail`, normally from tail_bound().
EnergyResult series_energy(const DiscreteMeasure& mu, const PowerSeries& f, double tail);

enum class PhaseWinner { Uniform, Antipodal, Tie, Inconclusive };

std::string_view to_string(PhaseWinner winner) noexcept;

struct PhaseConfig {
  Eigen::Index samples = 1'000'000;
  /// Number of random discrete measures; each also enters symmetrized.
  int candidates = 16;
  int max_support = 6;
  RngSeed seed;
};

struct PhaseRow {
  double delta = 0.0;
  double uniform = 0.0;
  double uniform_error = 0.0;
  double antipodal = 0.0;
  /// Largest energy among all discrete candidates, antipodal pair included.
  double best_discrete = 0.0;
  /// Spread (max - min) of the energies of the centrally symmetric candidates.
  double symmetric_spread = 0.0;
  double symmetric_min = 0.0;
  double symmetric_max = 0.0;
  PhaseWinner winner = PhaseWinner::Inconclusive;
};

/// For each delta, pits the uniform measure (Monte Carlo) against an antipodal
/// pair and random discrete measures (exact pairwise sums).
///
/// Uniform wins when it beats the antipodal pair by more than 3 standard errors
/// and no candidate beats it by more than that. Antipodal wins when it beats the
/// uniform estimate by more than 3 standard errors and every candidate is within
/// 1e-10 of it or below. A tie is reported when all centrally symmetric
/// candidates agree within 1e-10 and the uniform estimate is within 3 standard
/// errors of them.
std::vector<PhaseRow> phase_transition_experiment(EnergyKind kind, int n,
                                                  std::span<const double> deltas,
                                                  const PhaseConfig& config);

}  // namespace ecc
