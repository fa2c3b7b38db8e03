#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ecc/collection.hpp"

namespace ecc {

/// Largest number of stored coefficients a SymmetricTensor may hold.
inline constexpr double kMaxTensorEntries = 1e7;

/// Number of sorted multi-indices of length `degree` over `dim` symbols,
/// C(dim + degree - 1, degree), as a double (may exceed 2^53 for large inputs).
double symmetric_entry_count(int dim, int degree);

/// Number of distinct orderings of a sorted multi-index: degree! / prod(c_v!).
double index_multiplicity(std::span<const int> sorted_index);

/// Symmetric tensor of a given degree over R^dim.
///
/// Only one coefficient per sorted multi-index i_1 <= ... <= i_k is stored
/// (indices are 0-based), in lexicographic order. Each stored coefficient
/// stands for all of its permutations, so inner products weight it by
/// index_multiplicity(). A degree-0 tensor holds a single scalar.
class SymmetricTensor {
 public:
  /// Zero tensor. Throws Resource when the entry count exceeds kMaxTensorEntries.
  SymmetricTensor(int dim, int degree);

  static SymmetricTensor scalar(double value);

  int dim() const noexcept { return dim_; }
  int degree() const noexcept { return degree_; }
  std::size_t entry_count() const noexcept { return coeffs_.size(); }

  /// Entry for an arbitrary (not necessarily sorted) multi-index.
  double at(std::span<const int> index) const;
  double& at(std::span<const int> index);

  const std::vector<double>& coefficients() const noexcept { return coeffs_; }
  std::vector<double>& coefficients() noexcept { return coeffs_; }

  /// Position of a sorted multi-index in the lexicographic storage order.
  std::size_t rank(std::span<const int> sorted_index) const;

  /// Calls fn(sorted_index, coefficient) for every stored entry in storage order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    std::vector<int> index(static_cast<std::size_t>(degree_), 0);
    for (std::size_t r = 0; r < coeffs_.size(); ++r) {
      fn(std::span<const int>(index), coeffs_[r]);
      advance(index);
    }
  }

  SymmetricTensor& operator+=(const SymmetricTensor& other);
  SymmetricTensor& operator-=(const SymmetricTensor& other);
  SymmetricTensor& operator*=(double factor);

  /// Moves `index` to the next sorted multi-index in lexicographic order.
  /// Returns false after the last one.
  bool advance(std::vector<int>& index) const;

 private:
  void check_compatible(const SymmetricTensor& other) const;

  int dim_;
  int degree_;
  std::vector<double> coeffs_;
};

SymmetricTensor operator+(SymmetricTensor a, const SymmetricTensor& b);
SymmetricTensor operator-(SymmetricTensor a, const SymmetricTensor& b);
SymmetricTensor operator*(double factor, SymmetricTensor a);

/// Full n^k Euclidean inner product of two symmetric tensors.
double tensor_inner(const SymmetricTensor& a, const SymmetricTensor& b);

/// v^{(x)k}: the entry at (i_1..i_k) is v_{i_1} * ... * v_{i_k}.
SymmetricTensor power_tensor(const Eigen::VectorXd& v, int degree);

/// Weighted average of the k-th power tensors of a real collection.
SymmetricTensor moment_tensor(const UnitVectorCollection& x, int degree);

/// sum_{i,j} w_i w_j <z_i, z_j>^k computed from the Gram matrix.
/// Equals the squared norm of the k-th moment tensor; valid for either field.
double polynomial_energy(const UnitVectorCollection& x, int degree);

/// Moment tensor minus the moment tensor of the uniform measure on the sphere.
SymmetricTensor eccentricity_tensor(const UnitVectorCollection& x, int degree);

struct EccentricityNorm {
  double value = 0.0;
  /// Set for odd degrees, where the uniform moment tensor vanishes and the
  /// value is the polynomial energy itself.
  bool odd_degree = false;
};

/// Squared norm of the eccentricity tensor, computed as
/// polynomial_energy(x, k) - spherical_moment(n, k/2). Values in [-1e-10, 0)
/// are clamped to 0. Real collections only.
EccentricityNorm eccentricity_norm_sq(const UnitVectorCollection& x, int degree);

}  // namespace ecc
