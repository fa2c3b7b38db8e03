#pragma once

#include <optional>
#include <vector>

#include "ecc/collection.hpp"

namespace ecc {

/// max_{i != j} |<z_i, z_j>|. Needs at least two vectors.
double coherence(const UnitVectorCollection& z);

/// Raw double sum sum_{i,j} |<z_i, z_j>|^{2k}, diagonal included.
double frame_potential_sum(const UnitVectorCollection& z, int k);

/// (1/m^2) sum_{i,j} |<z_i, z_j>|^{2k}. Ignores the collection's weights.
double frame_potential(const UnitVectorCollection& z, int k);

/// Welch's lower bound on the averaged potential: 1 / C(n+k-1, k).
double classical_welch_bound(int n, int k);

/// Lower bound on the averaged potential for the given field: the Welch bound
/// for complex vectors and (2k-1)!! / (n (n+2) ... (n+2k-2)) for real ones.
/// It does not depend on m; m is validated only.
double welch_average_bound(int m, int n, int k, Field field);

struct CoherenceBound {
  /// Lower bound on c_max^{2k}: max(0, (m B - 1) / (m - 1)).
  double power_bound = 0.0;
  /// Its 2k-th root, a lower bound on c_max itself.
  double coherence_bound = 0.0;
  /// m B <= 1: the bound carries no information and was clamped to 0.
  bool vacuous = false;
};

/// Coherence bound obtained by separating the diagonal from the averaged bound.
/// Field::Complex gives Welch's original bound; Field::Real uses the improved
/// average bound instead.
CoherenceBound welch_cmax_bound(int m, int n, int k, Field field);

struct BoundReport {
  int m = 0;
  int n = 0;
  int k = 0;
  Field field = Field::Real;
  double potential = 0.0;         // (1/m^2) sum |<z_i,z_j>|^{2k}
  double scaled_potential = 0.0;  // the raw sum
  std::optional<double> coherence;
  double classical_bound = 0.0;
  std::optional<double> improved_bound;  // real collections only
  double applicable_bound = 0.0;
  std::optional<CoherenceBound> classical_cmax;
  std::optional<CoherenceBound> improved_cmax;  // real collections only
  double potential_gap = 0.0;                   // potential - applicable_bound
  std::optional<double> coherence_gap;          // c_max^{2k} - applicable cmax bound
};

/// One report per k in 1..k_max. Coherence fields are empty when m == 1.
std::vector<BoundReport> evaluate(const UnitVectorCollection& z, int k_max);

/// Bounds alone, without a collection.
struct BoundRow {
  int k = 0;
  double classical_bound = 0.0;
  std::optional<double> improved_bound;
  double applicable_bound = 0.0;
  double scaled_bound = 0.0;  // m^2 * applicable_bound
  std::optional<CoherenceBound> classical_cmax;  // empty when m == 1
  std::optional<CoherenceBound> improved_cmax;
};

std::vector<BoundRow> bound_table(int m, int n, int k_max, Field field);

}  // namespace ecc
