#pragma once

#include <cstdint>
#include <random>
#include <span>

#include <Eigen/Dense>

#include "ecc/collection.hpp"
#include "ecc/tensor.hpp"

namespace ecc {

struct SphereSpec {
  int dim = 1;
  Field field = Field::Real;
};

/// Seed for the samplers. Equal (seed, stream) pairs give equal sample sequences;
/// independent work items should use distinct streams.
struct RngSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

using Engine = std::mt19937_64;

Engine make_engine(RngSeed seed);

/// E<theta, v>^{2k} for theta uniform on S^{n-1}:
/// (1 * 3 * ... * (2k-1)) / (n (n+2) ... (n+2k-2)). Returns 1 for k = 0.
double spherical_moment(int n, int k);

/// E|<theta, v>|^{2k} for theta uniform on the complex sphere in C^n:
/// 1 / C(n+k-1, k).
double complex_spherical_moment(int n, int k);

/// E|g|^{2k} for a standard Gaussian g in R^n: n (n+2) ... (n+2k-2).
double gaussian_norm_moment(int n, int k);

/// Number of perfect matchings of the positions of a multi-index that only pair
/// equal indices. This is E[g_{i_1} ... g_{i_k}] for a standard Gaussian g.
double wick_pairing_count(std::span<const int> index);

/// Moment tensor E[theta^{(x)k}] of the uniform distribution on S^{n-1}.
/// Entries are Wick pairing counts divided by gaussian_norm_moment(n, k/2).
/// Odd degrees give the zero tensor.
SymmetricTensor uniform_sphere_moment_tensor(int n, int degree);

/// Overwrites `out` with one uniform point on S^{out.size()-1}.
void draw_real_sphere_point(Engine& engine, Eigen::Ref<Eigen::VectorXd> out);

/// i.i.d. uniform points on S^{n-1}, one per column (normalized Gaussians).
Eigen::MatrixXd sample_real_sphere(int n, Eigen::Index count, RngSeed seed);

/// i.i.d. uniform points on the unit sphere of C^n, one per column.
Eigen::MatrixXcd sample_complex_sphere(int n, Eigen::Index count, RngSeed seed);

/// Field-dispatching sampler; real samples come back with zero imaginary part.
Eigen::MatrixXcd sample_sphere(const SphereSpec& spec, Eigen::Index count, RngSeed seed);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

/// Sample mean and standard error (Bessel-corrected) of |<theta_i, e_1>|^{2k}.
MonteCarloEstimate monte_carlo_moment(const SphereSpec& spec, int k, Eigen::Index samples,
                                      RngSeed seed);

/// Mean and Bessel-corrected standard error of a sample.
MonteCarloEstimate mean_and_error(std::span<const double> values);

}  // namespace ecc
