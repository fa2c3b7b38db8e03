#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "ecc/collection.hpp"
#include "ecc/sphere.hpp"

namespace ecc {

struct OptimizeConfig {
  int m = 2;
  int n = 2;
  int k = 1;
  int restarts = 8;
  int max_iters = 20000;
  double step = 0.1;
  double tol_grad = 1e-9;
  RngSeed seed;
  /// Worker threads for restarts; results do not depend on it.
  int threads = 1;
  /// Optional n x m starting point, used for restart 0 (columns are renormalized).
  std::optional<Eigen::MatrixXd> warm_start;
  /// Keep the accepted potentials of the winning restart in OptimizeResult::trace.
  bool record_trace = false;
};

struct OptimizeResult {
  UnitVectorCollection vectors;
  double potential = 0.0;
  double scaled_potential = 0.0;  // m^2 * potential
  double bound = 0.0;             // improved real bound on the averaged potential
  double gap = 0.0;               // scaled_potential - m^2 * bound
  int iterations = 0;
  /// Tangent gradient fell below tol_grad, or the line search ran out of
  /// representable descent with the gradient already below 1e-6.
  bool converged = false;
  int best_restart = 0;
  double gradient_norm = 0.0;
  std::vector<double> trace = {};
};

/// Euclidean gradient of (1/m^2) sum_{i,j} <x_i, x_j>^{2k} with respect to each
/// column: (4k / m^2) sum_j <x_i, x_j>^{2k-1} x_j. Real collections only.
Eigen::MatrixXd potential_gradient(const UnitVectorCollection& z, int k);

/// potential_gradient with each column projected onto the tangent space of
/// the sphere at x_i.
Eigen::MatrixXd tangent_gradient(const UnitVectorCollection& z, int k);

/// Best-of-restarts projected gradient descent on the product of unit spheres.
///
/// Each iteration steps along the negative tangential gradient, renormalizes
/// the columns and accepts the move only if the potential drops; otherwise the
/// step is halved. The step resets to `config.step` after every accepted move.
/// Restart r draws its initial point from RngSeed{seed.seed, seed.stream + r}.
OptimizeResult minimize_potential(const OptimizeConfig& config);

/// Rotates/reflects the columns so the first becomes e_1 and, for n == 2, the
/// second lies in the closed upper half-plane.
Eigen::MatrixXd canonicalize(Eigen::MatrixXd x);

/// Minimal scaled potential sum_{i,j} cos(t_i - t_j)^{2k} over m <= 4 unit
/// vectors in R^2, by exhaustive search over angles in [0, pi)^{m-1} with the
/// first vector fixed at e_1 and spacing `resolution`, followed by
/// `refine_rounds` rounds of finer grids centred on the incumbent.
double brute_force_potential_min(int m, int k, double resolution, int refine_rounds = 8);

}  // namespace ecc
