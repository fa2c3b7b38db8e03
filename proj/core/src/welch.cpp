#include "ecc/welch.hpp"

#include <algorithm>
#include <cmath>

#include "ecc/error.hpp"
#include "ecc/sphere.hpp"
#include "numeric.hpp"

namespace ecc {

namespace {

void check_sizes(int m, int n, int k) {
  if (m < 1 || n < 1 || k < 1)
    fail(ErrorKind::InvalidInput, "m, n and k must all be >= 1");
}

}  // namespace

double coherence(const UnitVectorCollection& z) {
  if (z.size() < 2) fail(ErrorKind::InvalidInput, "coherence needs at least two vectors");
  const Eigen::MatrixXd g = z.abs_gram();
  double c = 0.0;
  for (Eigen::Index j = 0; j < g.cols(); ++j)
    for (Eigen::Index i = 0; i < j; ++i) c = std::max(c, g(i, j));
  return c;
}

double frame_potential_sum(const UnitVectorCollection& z, int k) {
  if (k < 1) fail(ErrorKind::InvalidInput, "frame potential exponent k must be >= 1");
  double sum = 0.0;
  if (z.is_real()) {
    const Eigen::MatrixXd g = z.real_gram();
    for (Eigen::Index j = 0; j < g.cols(); ++j)
      for (Eigen::Index i = 0; i < g.rows(); ++i) sum += detail::ipow(g(i, j) * g(i, j), k);
  } else {
    const Eigen::MatrixXcd g = z.complex_gram();
    for (Eigen::Index j = 0; j < g.cols(); ++j)
      for (Eigen::Index i = 0; i < g.rows(); ++i) sum += detail::ipow(std::norm(g(i, j)), k);
  }
  return sum;
}

double frame_potential(const UnitVectorCollection& z, int k) {
  const auto m = static_cast<double>(z.size());
  return frame_potential_sum(z, k) / (m * m);
}

double classical_welch_bound(int n, int k) { return complex_spherical_moment(n, k); }

double welch_average_bound(int m, int n, int k, Field field) {
  check_sizes(m, n, k);
  return field == Field::Complex ? complex_spherical_moment(n, k) : spherical_moment(n, k);
}

CoherenceBound welch_cmax_bound(int m, int n, int k, Field field) {
  check_sizes(m, n, k);
  if (m < 2) fail(ErrorKind::InvalidInput, "coherence bound needs m >= 2");
  const double b = welch_average_bound(m, n, k, field);
  const double raw = (m * b - 1.0) / (m - 1.0);
  CoherenceBound out;
  out.vacuous = raw <= 0.0;
  out.power_bound = std::max(0.0, raw);
  out.coherence_bound = std::pow(out.power_bound, 1.0 / (2.0 * k));
  return out;
}

std::vector<BoundReport> evaluate(const UnitVectorCollection& z, int k_max) {
  if (k_max < 1) fail(ErrorKind::InvalidInput, "k_max must be >= 1");
  const int m = static_cast<int>(z.size());
  const int n = static_cast<int>(z.dim());
  const auto m2 = static_cast<double>(m) * m;
  std::optional<double> c;
  if (m >= 2) c = coherence(z);

  std::vector<BoundReport> reports;
  reports.reserve(static_cast<std::size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    BoundReport r;
    r.m = m;
    r.n = n;
    r.k = k;
    r.field = z.field();
    r.scaled_potential = frame_potential_sum(z, k);
    r.potential = r.scaled_potential / m2;
    r.coherence = c;
    r.classical_bound = classical_welch_bound(n, k);
    r.applicable_bound = r.classical_bound;
    if (z.is_real()) {
      r.improved_bound = spherical_moment(n, k);
      r.applicable_bound = *r.improved_bound;
    }
    r.potential_gap = r.potential - r.applicable_bound;
    if (m >= 2) {
      r.classical_cmax = welch_cmax_bound(m, n, k, Field::Complex);
      if (z.is_real()) r.improved_cmax = welch_cmax_bound(m, n, k, Field::Real);
      const double applicable = z.is_real() ? r.improved_cmax->power_bound : r.classical_cmax->power_bound;
      r.coherence_gap = std::pow(*c, 2.0 * k) - applicable;
    }
    reports.push_back(r);
  }
  return reports;
}

std::vector<BoundRow> bound_table(int m, int n, int k_max, Field field) {
  check_sizes(m, n, k_max);
  std::vector<BoundRow> rows;
  for (int k = 1; k <= k_max; ++k) {
    BoundRow row;
    row.k = k;
    row.classical_bound = classical_welch_bound(n, k);
    row.applicable_bound = row.classical_bound;
    if (field == Field::Real) {
      row.improved_bound = spherical_moment(n, k);
      row.applicable_bound = *row.improved_bound;
    }
    row.scaled_bound = static_cast<double>(m) * m * row.applicable_bound;
    if (m >= 2) {
      row.classical_cmax = welch_cmax_bound(m, n, k, Field::Complex);
      if (field == Field::Real) row.improved_cmax = welch_cmax_bound(m, n, k, Field::Real);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ecc
