#pragma once

#include <Eigen/Dense>

namespace ecc {

enum class Field { Real, Complex };

const char* to_string(Field field) noexcept;

/// Maximum allowed deviation | |z| - 1 | for a vector to count as a unit vector.
inline constexpr double kUnitTolerance = 1e-8;

/// Maximum allowed deviation of the weight sum from 1.
inline constexpr double kWeightTolerance = 1e-12;

/// m unit vectors in R^n or C^n stored as the columns of an n x m matrix,
/// together with probability weights (uniform unless given).
///
/// Vectors whose norms miss 1 by more than kUnitTolerance are rejected with a
/// Validation error, unless `renormalize` is set, in which case every column
/// is divided by its norm on construction.
class UnitVectorCollection {
 public:
  static UnitVectorCollection real(Eigen::MatrixXd columns,
                                   Eigen::VectorXd weights = {},
                                   bool renormalize = false);
  static UnitVectorCollection complex(Eigen::MatrixXcd columns,
                                      Eigen::VectorXd weights = {},
                                      bool renormalize = false);

  Field field() const noexcept { return field_; }
  bool is_real() const noexcept { return field_ == Field::Real; }
  Eigen::Index dim() const noexcept { return dim_; }
  Eigen::Index size() const noexcept { return weights_.size(); }

  /// Columns of a real collection. Throws UnsupportedField for complex ones.
  const Eigen::MatrixXd& real_vectors() const;
  /// Columns as complex numbers; real collections are promoted.
  Eigen::MatrixXcd complex_vectors() const;

  const Eigen::VectorXd& weights() const noexcept { return weights_; }
  bool has_uniform_weights() const noexcept { return uniform_; }

  /// G(i, j) = <z_i, z_j>. Real collections only.
  Eigen::MatrixXd real_gram() const;
  /// G(i, j) = z_i^* z_j, valid for either field.
  Eigen::MatrixXcd complex_gram() const;
  /// |<z_i, z_j>| for either field.
  Eigen::MatrixXd abs_gram() const;

 private:
  UnitVectorCollection() = default;
  void set_weights(Eigen::VectorXd weights, Eigen::Index m);

  Field field_ = Field::Real;
  Eigen::Index dim_ = 0;
  Eigen::MatrixXd real_;
  Eigen::MatrixXcd complex_;
  Eigen::VectorXd weights_;
  bool uniform_ = true;
};

}  // namespace ecc
