#include "ecc/collection.hpp"

#include <cmath>
#include <string>

#include "ecc/error.hpp"

namespace ecc {

const char* to_string(Field field) noexcept {
  return field == Field::Real ? "real" : "complex";
}

namespace {

template <typename Matrix>
void check_shape(const Matrix& columns) {
  if (columns.rows() < 1)
    fail(ErrorKind::InvalidInput, "collection vectors must have dimension >= 1");
  if (columns.cols() < 1)
    fail(ErrorKind::InvalidInput, "collection must contain at least one vector");
  if (!columns.allFinite())
    fail(ErrorKind::Validation, "collection contains non-finite entries");
}

template <typename Matrix>
void normalize_or_check(Matrix& columns, bool renormalize) {
  for (Eigen::Index j = 0; j < columns.cols(); ++j) {
    const double norm = columns.col(j).norm();
    if (renormalize) {
      if (norm == 0.0)
        fail(ErrorKind::Validation,
             "vector " + std::to_string(j) + " is zero and cannot be renormalized");
      columns.col(j) /= norm;
    } else if (std::abs(norm - 1.0) > kUnitTolerance) {
      fail(ErrorKind::Validation,
           "vector " + std::to_string(j) + " has norm " + std::to_string(norm) +
               " (pass renormalize to rescale)");
    }
  }
}

}  // namespace

void UnitVectorCollection::set_weights(Eigen::VectorXd weights, Eigen::Index m) {
  if (weights.size() == 0) {
    weights_ = Eigen::VectorXd::Constant(m, 1.0 / static_cast<double>(m));
    uniform_ = true;
    return;
  }
  if (weights.size() != m)
    fail(ErrorKind::Shape, "weights length " + std::to_string(weights.size()) +
                               " does not match vector count " + std::to_string(m));
  if (!weights.allFinite() || (weights.array() < 0.0).any())
    fail(ErrorKind::Validation, "weights must be finite and non-negative");
  if (std::abs(weights.sum() - 1.0) > kWeightTolerance)
    fail(ErrorKind::Validation, "weights must sum to 1");
  weights_ = std::move(weights);
  uniform_ = (weights_.array() == weights_(0)).all();
}

UnitVectorCollection UnitVectorCollection::real(Eigen::MatrixXd columns,
                                                Eigen::VectorXd weights,
                                                bool renormalize) {
  check_shape(columns);
  normalize_or_check(columns, renormalize);
  UnitVectorCollection c;
  c.field_ = Field::Real;
  c.dim_ = columns.rows();
  c.real_ = std::move(columns);
  c.set_weights(std::move(weights), c.real_.cols());
  return c;
}

UnitVectorCollection UnitVectorCollection::complex(Eigen::MatrixXcd columns,
                                                   Eigen::VectorXd weights,
                                                   bool renormalize) {
  check_shape(columns);
  normalize_or_check(columns, renormalize);
  UnitVectorCollection c;
  c.field_ = Field::Complex;
  c.dim_ = columns.rows();
  c.complex_ = std::move(columns);
  c.set_weights(std::move(weights), c.complex_.cols());
  return c;
}

const Eigen::MatrixXd& UnitVectorCollection::real_vectors() const {
  if (field_ != Field::Real)
    fail(ErrorKind::UnsupportedField, "operation requires a real collection");
  return real_;
}

Eigen::MatrixXcd UnitVectorCollection::complex_vectors() const {
  if (field_ == Field::Complex) return complex_;
  return real_.cast<std::complex<double>>();
}

Eigen::MatrixXd UnitVectorCollection::real_gram() const {
  const auto& x = real_vectors();
  return x.transpose() * x;
}

Eigen::MatrixXcd UnitVectorCollection::complex_gram() const {
  if (field_ == Field::Real) return real_gram().cast<std::complex<double>>();
  return complex_.adjoint() * complex_;
}

Eigen::MatrixXd UnitVectorCollection::abs_gram() const {
  if (field_ == Field::Real) return real_gram().cwiseAbs();
  return complex_gram().cwiseAbs();
}

}  // namespace ecc
