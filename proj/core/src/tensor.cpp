#include "ecc/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ecc/error.hpp"
#include "ecc/sphere.hpp"
#include "numeric.hpp"

namespace ecc {

double symmetric_entry_count(int dim, int degree) {
  double count = 1.0;
  for (int i = 1; i <= degree; ++i)
    count = count * static_cast<double>(dim - 1 + i) / static_cast<double>(i);
  return std::round(count);
}

double index_multiplicity(std::span<const int> sorted_index) {
  double result = 1.0;
  int position = 0;
  int run = 0;
  for (std::size_t p = 0; p < sorted_index.size(); ++p) {
    run = (p > 0 && sorted_index[p] == sorted_index[p - 1]) ? run + 1 : 1;
    ++position;
    result = result * position / run;
  }
  return std::round(result);
}

SymmetricTensor::SymmetricTensor(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 1) fail(ErrorKind::InvalidInput, "tensor dimension must be >= 1");
  if (degree < 0) fail(ErrorKind::InvalidInput, "tensor degree must be >= 0");
  const double count = symmetric_entry_count(dim, degree);
  if (count > kMaxTensorEntries)
    fail(ErrorKind::Resource, "symmetric tensor of degree " + std::to_string(degree) +
                                  " over dimension " + std::to_string(dim) + " needs " +
                                  std::to_string(count) + " entries (budget 1e7)");
  coeffs_.assign(static_cast<std::size_t>(count), 0.0);
}

SymmetricTensor SymmetricTensor::scalar(double value) {
  SymmetricTensor t(1, 0);
  t.coeffs_[0] = value;
  return t;
}

bool SymmetricTensor::advance(std::vector<int>& index) const {
  for (int p = degree_ - 1; p >= 0; --p) {
    if (index[p] < dim_ - 1) {
      const int v = index[p] + 1;
      std::fill(index.begin() + p, index.end(), v);
      return true;
    }
  }
  return false;
}

std::size_t SymmetricTensor::rank(std::span<const int> sorted_index) const {
  if (static_cast<int>(sorted_index.size()) != degree_)
    fail(ErrorKind::Shape, "multi-index length does not match tensor degree");
  std::size_t r = 0;
  int lo = 0;
  for (int p = 0; p < degree_; ++p) {
    const int v = sorted_index[p];
    if (v < lo || v >= dim_) fail(ErrorKind::InvalidInput, "multi-index is not sorted or out of range");
    const int remaining = degree_ - p - 1;
    // Sequences that put a smaller value u at position p, followed by any
    // sorted tail over [u, dim).
    for (int u = lo; u < v; ++u)
      r += detail::binomial_u64(static_cast<std::uint64_t>(dim_ - u + remaining - 1),
                                static_cast<std::uint64_t>(remaining));
    lo = v;
  }
  return r;
}

double SymmetricTensor::at(std::span<const int> index) const {
  std::vector<int> sorted(index.begin(), index.end());
  std::sort(sorted.begin(), sorted.end());
  return coeffs_[rank(sorted)];
}

double& SymmetricTensor::at(std::span<const int> index) {
  std::vector<int> sorted(index.begin(), index.end());
  std::sort(sorted.begin(), sorted.end());
  return coeffs_[rank(sorted)];
}

void SymmetricTensor::check_compatible(const SymmetricTensor& other) const {
  if (dim_ != other.dim_ || degree_ != other.degree_)
    fail(ErrorKind::Shape, "symmetric tensors differ in dimension or degree (" +
                               std::to_string(dim_) + "," + std::to_string(degree_) + ") vs (" +
                               std::to_string(other.dim_) + "," +
                               std::to_string(other.degree_) + ")");
}

SymmetricTensor& SymmetricTensor::operator+=(const SymmetricTensor& other) {
  check_compatible(other);
  for (std::size_t r = 0; r < coeffs_.size(); ++r) coeffs_[r] += other.coeffs_[r];
  return *this;
}

SymmetricTensor& SymmetricTensor::operator-=(const SymmetricTensor& other) {
  check_compatible(other);
  for (std::size_t r = 0; r < coeffs_.size(); ++r) coeffs_[r] -= other.coeffs_[r];
  return *this;
}

SymmetricTensor& SymmetricTensor::operator*=(double factor) {
  for (double& c : coeffs_) c *= factor;
  return *this;
}

SymmetricTensor operator+(SymmetricTensor a, const SymmetricTensor& b) { return a += b; }
SymmetricTensor operator-(SymmetricTensor a, const SymmetricTensor& b) { return a -= b; }
SymmetricTensor operator*(double factor, SymmetricTensor a) { return a *= factor; }

double tensor_inner(const SymmetricTensor& a, const SymmetricTensor& b) {
  if (a.degree() == 0 && b.degree() == 0) return a.coefficients()[0] * b.coefficients()[0];
  if (a.dim() != b.dim() || a.degree() != b.degree())
    fail(ErrorKind::Shape, "tensor_inner: dimension or degree mismatch");
  const auto& bc = b.coefficients();
  double sum = 0.0;
  std::size_t r = 0;
  a.for_each([&](std::span<const int> index, double value) {
    if (value != 0.0 && bc[r] != 0.0) sum += index_multiplicity(index) * value * bc[r];
    ++r;
  });
  return sum;
}

namespace {

void accumulate_power(SymmetricTensor& t, const Eigen::VectorXd& v, double weight) {
  auto& coeffs = t.coefficients();
  std::size_t r = 0;
  t.for_each([&](std::span<const int> index, double) {
    double product = weight;
    for (int i : index) product *= v(i);
    coeffs[r++] += product;
  });
}

}  // namespace

SymmetricTensor power_tensor(const Eigen::VectorXd& v, int degree) {
  if (v.size() < 1) fail(ErrorKind::InvalidInput, "power_tensor: vector has dimension 0");
  if (degree < 0) fail(ErrorKind::InvalidInput, "power_tensor: degree must be >= 0");
  if (degree == 0) return SymmetricTensor::scalar(1.0);
  SymmetricTensor t(static_cast<int>(v.size()), degree);
  accumulate_power(t, v, 1.0);
  return t;
}

SymmetricTensor moment_tensor(const UnitVectorCollection& x, int degree) {
  if (!x.is_real())
    fail(ErrorKind::UnsupportedField,
         "moment_tensor is defined for real collections; use the Gram-side "
         "polynomial_energy / frame_potential for complex ones");
  if (degree < 0) fail(ErrorKind::InvalidInput, "moment_tensor: degree must be >= 0");
  if (degree == 0) return SymmetricTensor::scalar(1.0);
  const auto& z = x.real_vectors();
  SymmetricTensor t(static_cast<int>(x.dim()), degree);
  for (Eigen::Index i = 0; i < z.cols(); ++i) accumulate_power(t, z.col(i), x.weights()(i));
  return t;
}

double polynomial_energy(const UnitVectorCollection& x, int degree) {
  if (degree < 0) fail(ErrorKind::InvalidInput, "polynomial_energy: degree must be >= 0");
  const auto& w = x.weights();
  const Eigen::Index m = x.size();
  double sum = 0.0;
  if (x.is_real()) {
    const Eigen::MatrixXd g = x.real_gram();
    for (Eigen::Index j = 0; j < m; ++j)
      for (Eigen::Index i = 0; i < m; ++i) sum += w(i) * w(j) * detail::ipow(g(i, j), degree);
  } else {
    const Eigen::MatrixXcd g = x.complex_gram();
    for (Eigen::Index j = 0; j < m; ++j)
      for (Eigen::Index i = 0; i < m; ++i)
        sum += w(i) * w(j) * detail::ipow(g(i, j), degree).real();
  }
  return sum;
}

SymmetricTensor eccentricity_tensor(const UnitVectorCollection& x, int degree) {
  SymmetricTensor m = moment_tensor(x, degree);
  if (degree == 0) return SymmetricTensor::scalar(0.0);
  return m - uniform_sphere_moment_tensor(static_cast<int>(x.dim()), degree);
}

EccentricityNorm eccentricity_norm_sq(const UnitVectorCollection& x, int degree) {
  if (!x.is_real())
    fail(ErrorKind::UnsupportedField, "eccentricity_norm_sq requires a real collection");
  if (degree < 0) fail(ErrorKind::InvalidInput, "eccentricity_norm_sq: degree must be >= 0");
  const double energy = polynomial_energy(x, degree);
  if (degree % 2 == 1) return {energy, true};
  double value = energy - spherical_moment(static_cast<int>(x.dim()), degree / 2);
  if (value < 0.0 && value >= -1e-10) value = 0.0;
  return {value, false};
}

}  // namespace ecc
