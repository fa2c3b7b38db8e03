#include "ecc/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "ecc/error.hpp"
#include "ecc/welch.hpp"
#include "numeric.hpp"

namespace ecc {

namespace {

double scaled_potential_of(const Eigen::MatrixXd& x, int k) {
  const Eigen::MatrixXd g = x.transpose() * x;
  double sum = 0.0;
  for (Eigen::Index j = 0; j < g.cols(); ++j)
    for (Eigen::Index i = 0; i < g.rows(); ++i) sum += detail::ipow(g(i, j) * g(i, j), k);
  return sum;
}

Eigen::MatrixXd gradient_of(const Eigen::MatrixXd& x, int k) {
  const auto m = static_cast<double>(x.cols());
  Eigen::MatrixXd g = x.transpose() * x;
  g = g.unaryExpr([k](double v) { return detail::ipow(v, 2 * k - 1); });
  return (4.0 * k / (m * m)) * (x * g);
}

Eigen::MatrixXd project_tangent(const Eigen::MatrixXd& x, Eigen::MatrixXd grad) {
  for (Eigen::Index i = 0; i < x.cols(); ++i) grad.col(i) -= x.col(i).dot(grad.col(i)) * x.col(i);
  return grad;
}

void normalize_columns(Eigen::MatrixXd& x) {
  for (Eigen::Index i = 0; i < x.cols(); ++i) x.col(i).normalize();
}

constexpr double kStallGradient = 1e-6;

struct RestartOutcome {
  Eigen::MatrixXd x;
  double scaled = std::numeric_limits<double>::infinity();
  double gradient_norm = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> trace;
};

RestartOutcome run_restart(const OptimizeConfig& config, Eigen::MatrixXd x) {
  RestartOutcome out;
  double current = scaled_potential_of(x, config.k);
  if (config.record_trace) out.trace.push_back(current);
  double step = config.step;
  int iter = 0;
  for (; iter < config.max_iters; ++iter) {
    const Eigen::MatrixXd tangent = project_tangent(x, gradient_of(x, config.k));
    out.gradient_norm = tangent.norm();
    if (out.gradient_norm < config.tol_grad) {
      out.converged = true;
      break;
    }
    bool accepted = false;
    while (step > 1e-18) {
      Eigen::MatrixXd trial = x - step * tangent;
      normalize_columns(trial);
      const double value = scaled_potential_of(trial, config.k);
      if (value < current) {
        x = std::move(trial);
        current = value;
        accepted = true;
        break;
      }
      step /= 2.0;
    }
    if (!accepted) {  // no descent left at machine precision
      out.converged = out.gradient_norm < kStallGradient;
      break;
    }
    step = config.step;
    if (config.record_trace) out.trace.push_back(current);
  }
  out.x = std::move(x);
  out.scaled = current;
  out.iterations = iter;
  return out;
}

}  // namespace

Eigen::MatrixXd potential_gradient(const UnitVectorCollection& z, int k) {
  if (!z.is_real())
    fail(ErrorKind::UnsupportedField, "potential_gradient supports real collections only");
  if (k < 1) fail(ErrorKind::InvalidInput, "potential_gradient: k must be >= 1");
  return gradient_of(z.real_vectors(), k);
}

Eigen::MatrixXd tangent_gradient(const UnitVectorCollection& z, int k) {
  return project_tangent(z.real_vectors(), potential_gradient(z, k));
}

Eigen::MatrixXd canonicalize(Eigen::MatrixXd x) {
  if (x.cols() == 0) return x;
  const Eigen::Index n = x.rows();
  if (n == 1) {
    if (x(0, 0) < 0.0) x = -x;
    return x;
  }
  if (n == 2) {
    const double angle = std::atan2(x(1, 0), x(0, 0));
    const Eigen::Matrix2d rot = Eigen::Rotation2Dd(-angle).toRotationMatrix();
    x = rot * x;
    x(1, 0) = 0.0;
    if (x.cols() > 1 && x(1, 1) < 0.0) x.row(1) = -x.row(1);
    return x;
  }
  const Eigen::VectorXd e1 = Eigen::VectorXd::Unit(n, 0);
  const Eigen::VectorXd u = x.col(0) - e1;
  if (u.norm() > 1e-15) {
    const Eigen::VectorXd v = u / u.norm();
    x -= 2.0 * v * (v.transpose() * x);
  }
  return x;
}

OptimizeResult minimize_potential(const OptimizeConfig& config) {
  if (config.m < 1 || config.n < 1 || config.k < 1)
    fail(ErrorKind::InvalidInput, "minimize_potential: m, n, k must be >= 1");
  if (config.restarts < 1) fail(ErrorKind::InvalidInput, "minimize_potential: restarts must be >= 1");
  if (config.max_iters < 0) fail(ErrorKind::InvalidInput, "minimize_potential: max_iters must be >= 0");
  if (!(config.step > 0.0)) fail(ErrorKind::InvalidInput, "minimize_potential: step must be > 0");
  if (!(config.tol_grad > 0.0)) fail(ErrorKind::InvalidInput, "minimize_potential: tol_grad must be > 0");
  if (config.warm_start &&
      (config.warm_start->rows() != config.n || config.warm_start->cols() != config.m))
    fail(ErrorKind::Shape, "warm start must be an n x m matrix");

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(config.restarts));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int r = next++; r < config.restarts; r = next++) {
      Eigen::MatrixXd start;
      if (r == 0 && config.warm_start) {
        start = UnitVectorCollection::real(*config.warm_start, {}, true).real_vectors();
      } else {
        start = sample_real_sphere(config.n, config.m,
                                   {config.seed.seed, config.seed.stream + static_cast<std::uint64_t>(r)});
      }
      outcomes[static_cast<std::size_t>(r)] = run_restart(config, std::move(start));
    }
  };
  const int threads = std::clamp(config.threads, 1, config.restarts);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  // Lowest potential wins; ties go to the lowest restart index.
  std::size_t best = 0;
  for (std::size_t r = 1; r < outcomes.size(); ++r)
    if (outcomes[r].scaled < outcomes[best].scaled) best = r;
  auto& win = outcomes[best];

  const double m2 = static_cast<double>(config.m) * config.m;
  OptimizeResult result{.vectors = UnitVectorCollection::real(canonicalize(std::move(win.x)))};
  result.scaled_potential = frame_potential_sum(result.vectors, config.k);
  result.potential = result.scaled_potential / m2;
  result.bound = welch_average_bound(config.m, config.n, config.k, Field::Real);
  result.gap = result.scaled_potential - m2 * result.bound;
  result.iterations = win.iterations;
  result.converged = win.converged;
  result.best_restart = static_cast<int>(best);
  result.gradient_norm = win.gradient_norm;
  result.trace = std::move(win.trace);
  return result;
}

double brute_force_potential_min(int m, int k, double resolution, int refine_rounds) {
  if (m < 1 || k < 1) fail(ErrorKind::InvalidInput, "brute_force_potential_min: m, k must be >= 1");
  if (m > 4) fail(ErrorKind::Resource, "brute_force_potential_min supports m <= 4");
  if (!(resolution > 0.0) || resolution > 1.0)
    fail(ErrorKind::InvalidInput, "brute_force_potential_min: resolution must lie in (0, 1]");
  if (m == 1) return 1.0;

  const int free = m - 1;
  auto scaled = [&](const std::vector<double>& t) {
    double sum = m;  // diagonal
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        const double ti = i == 0 ? 0.0 : t[i - 1];
        const double c = std::cos(ti - t[j - 1]);
        sum += 2.0 * detail::ipow(c * c, k);
      }
    return sum;
  };

  // Exhaustive pass over [0, pi)^{m-1}. Angle differences are multiples of
  // the spacing, so the pair terms come from a table.
  const int cells = static_cast<int>(std::ceil(std::numbers::pi / resolution));
  const double h = std::numbers::pi / cells;
  std::vector<double> table(static_cast<std::size_t>(cells));
  for (int d = 0; d < cells; ++d) {
    const double c = std::cos(d * h);
    table[d] = 2.0 * detail::ipow(c * c, k);
  }
  auto pair = [&](int a, int b) { return table[static_cast<std::size_t>(std::abs(a - b))]; };

  std::vector<int> idx(static_cast<std::size_t>(free), 0);
  std::vector<int> best_idx = idx;
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    double sum = m;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) sum += pair(i == 0 ? 0 : idx[i - 1], idx[j - 1]);
    if (sum < best) {
      best = sum;
      best_idx = idx;
    }
    int p = 0;
    while (p < free && ++idx[p] == cells) idx[p++] = 0;
    if (p == free) break;
  }

  std::vector<double> centre(static_cast<std::size_t>(free));
  for (int i = 0; i < free; ++i) centre[i] = best_idx[i] * h;

  // Refinement: 17 points per axis spanning +-2 old spacings.
  constexpr int kHalf = 8;
  double spacing = h;
  for (int round = 0; round < refine_rounds; ++round) {
    const double fine = spacing / 4.0;
    std::vector<int> off(static_cast<std::size_t>(free), -kHalf);
    std::vector<double> incumbent = centre;
    std::vector<double> t(static_cast<std::size_t>(free));
    while (true) {
      for (int i = 0; i < free; ++i) t[i] = centre[i] + off[i] * fine;
      const double value = scaled(t);
      if (value < best) {
        best = value;
        incumbent = t;
      }
      int p = 0;
      while (p < free && ++off[p] > kHalf) off[p++] = -kHalf;
      if (p == free) break;
    }
    centre = incumbent;
    spacing = fine;
  }
  return best;
}

}  // namespace ecc
