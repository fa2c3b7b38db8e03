#include "ecc/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "ecc/error.hpp"
#include "ecc/tensor.hpp"

namespace ecc {

namespace {

UnitVectorCollection require_real(UnitVectorCollection points) {
  if (!points.is_real()) fail(ErrorKind::UnsupportedField, "discrete measures live on the real sphere");
  return points;
}

void check_delta(double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta))
    fail(ErrorKind::InvalidInput, "energy exponent delta must be > 0");
}

}  // namespace

DiscreteMeasure::DiscreteMeasure(UnitVectorCollection points) : points_(require_real(std::move(points))) {}

DiscreteMeasure DiscreteMeasure::point_mass(const Eigen::VectorXd& p) {
  return DiscreteMeasure(UnitVectorCollection::real(p));
}

DiscreteMeasure DiscreteMeasure::antipodal(const Eigen::VectorXd& p) {
  Eigen::MatrixXd support(p.size(), 2);
  support.col(0) = p;
  support.col(1) = -p;
  return DiscreteMeasure(UnitVectorCollection::real(std::move(support)));
}

DiscreteMeasure DiscreteMeasure::symmetrized() const {
  const auto& x = support();
  Eigen::MatrixXd both(x.rows(), 2 * x.cols());
  both << x, -x;
  Eigen::VectorXd w(2 * x.cols());
  w << weights() / 2.0, weights() / 2.0;
  return DiscreteMeasure(UnitVectorCollection::real(std::move(both), std::move(w)));
}

std::string_view to_string(EnergyKind kind) noexcept {
  return kind == EnergyKind::Geodesic ? "geodesic" : "euclidean";
}

std::string_view to_string(EnergyMethod method) noexcept {
  switch (method) {
    case EnergyMethod::ClosedForm: return "closed-form";
    case EnergyMethod::PairwiseSum: return "pairwise-sum";
    case EnergyMethod::MonteCarlo: return "monte-carlo";
    case EnergyMethod::Series: return "series";
  }
  return "unknown";
}

std::string_view to_string(PhaseWinner winner) noexcept {
  switch (winner) {
    case PhaseWinner::Uniform: return "uniform";
    case PhaseWinner::Antipodal: return "antipodal";
    case PhaseWinner::Tie: return "tie";
    case PhaseWinner::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

double critical_exponent(EnergyKind kind) noexcept {
  return kind == EnergyKind::Geodesic ? 1.0 : 2.0;
}

double distance_kernel(EnergyKind kind, double delta, double t) {
  t = std::clamp(t, -1.0, 1.0);
  if (kind == EnergyKind::Geodesic) return std::pow(std::acos(t), delta);
  return std::pow(2.0 - 2.0 * t, delta / 2.0);
}

namespace {

// acos(<x,y>) loses half the digits near +-1; this form keeps
// d(x,y) + d(x,-y) = pi to rounding, which the delta = 1 ties rely on.
double angle(const Eigen::Ref<const Eigen::VectorXd>& x, const Eigen::Ref<const Eigen::VectorXd>& y) {
  return 2.0 * std::atan2((x - y).norm(), (x + y).norm());
}

}  // namespace

EnergyResult geodesic_energy(const DiscreteMeasure& mu, double delta) {
  check_delta(delta);
  const auto& x = mu.support();
  const auto& w = mu.weights();
  double sum = 0.0;
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    for (Eigen::Index i = 0; i < x.cols(); ++i) {
      if (i == j) continue;
      sum += w(i) * w(j) * std::pow(angle(x.col(i), x.col(j)), delta);
    }
  return {sum, EnergyMethod::PairwiseSum, 0.0};
}

EnergyResult euclidean_energy(const DiscreteMeasure& mu, double delta) {
  check_delta(delta);
  const auto& x = mu.support();
  const auto& w = mu.weights();
  double sum = 0.0;
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    for (Eigen::Index i = 0; i < x.cols(); ++i) {
      if (i == j) continue;
      sum += w(i) * w(j) * std::pow((x.col(i) - x.col(j)).norm(), delta);
    }
  return {sum, EnergyMethod::PairwiseSum, 0.0};
}

EnergyResult energy(const DiscreteMeasure& mu, EnergyKind kind, double delta) {
  return kind == EnergyKind::Geodesic ? geodesic_energy(mu, delta) : euclidean_energy(mu, delta);
}

EnergyResult uniform_energy(int n, EnergyKind kind, double delta, Eigen::Index samples,
                            RngSeed seed) {
  check_delta(delta);
  if (n < 1) fail(ErrorKind::InvalidInput, "uniform_energy: n must be >= 1");
  if (samples < 2) fail(ErrorKind::InvalidInput, "uniform_energy: samples must be >= 2");
  Engine engine = make_engine(seed);
  Eigen::VectorXd x(n), y(n);
  std::vector<double> values(static_cast<std::size_t>(samples));
  for (auto& v : values) {
    draw_real_sphere_point(engine, x);
    draw_real_sphere_point(engine, y);
    v = kind == EnergyKind::Geodesic ? std::pow(angle(x, y), delta)
                                     : std::pow((x - y).norm(), delta);
  }
  const auto est = mean_and_error(values);
  return {est.estimate, EnergyMethod::MonteCarlo, est.std_error};
}

EnergyResult series_energy(const DiscreteMeasure& mu, const PowerSeries& f, double tail) {
  if (!(tail >= 0.0)) fail(ErrorKind::InvalidInput, "series_energy: tail must be >= 0");
  // E<X,X'>^k for k = 1..N, accumulated through elementwise powers of the Gram matrix.
  const Eigen::MatrixXd g = mu.points().real_gram();
  const auto& w = mu.weights();
  const Eigen::MatrixXd ww = w * w.transpose();
  Eigen::MatrixXd power = Eigen::MatrixXd::Ones(g.rows(), g.cols());
  double value = f[0];
  for (int k = 1; k <= f.order(); ++k) {
    power = power.cwiseProduct(g);
    if (f[k] == 0.0) continue;
    const double moment = (ww.cwiseProduct(power)).sum();
    value += f[k] * moment;
  }
  return {value, EnergyMethod::Series, tail};
}

std::vector<PhaseRow> phase_transition_experiment(EnergyKind kind, int n,
                                                  std::span<const double> deltas,
                                                  const PhaseConfig& config) {
  if (n < 1) fail(ErrorKind::InvalidInput, "phase_transition_experiment: n must be >= 1");
  if (config.candidates < 0 || config.max_support < 1)
    fail(ErrorKind::InvalidInput, "phase_transition_experiment: bad candidate settings");
  for (double d : deltas)
    if (!(d > 0.0 && d <= 4.0))
      fail(ErrorKind::InvalidInput, "phase_transition_experiment: deltas must lie in (0, 4]");

  const DiscreteMeasure antipodal = DiscreteMeasure::antipodal(Eigen::VectorXd::Unit(n, 0));

  std::vector<DiscreteMeasure> random;
  std::vector<DiscreteMeasure> symmetric{antipodal};
  Engine engine = make_engine({config.seed.seed, config.seed.stream + 1});
  std::uniform_int_distribution<int> support_size(1, config.max_support);
  std::exponential_distribution<double> weight_draw(1.0);
  for (int c = 0; c < config.candidates; ++c) {
    const int s = support_size(engine);
    Eigen::MatrixXd points(n, s);
    for (int j = 0; j < s; ++j) draw_real_sphere_point(engine, points.col(j));
    Eigen::VectorXd w(s);
    for (int j = 0; j < s; ++j) w(j) = weight_draw(engine) + 1e-3;
    w /= w.sum();
    DiscreteMeasure mu(UnitVectorCollection::real(std::move(points), std::move(w)));
    symmetric.push_back(mu.symmetrized());
    random.push_back(std::move(mu));
  }

  std::vector<PhaseRow> rows;
  for (std::size_t d = 0; d < deltas.size(); ++d) {
    const double delta = deltas[d];
    PhaseRow row;
    row.delta = delta;
    const auto u = uniform_energy(n, kind, delta, config.samples,
                                  {config.seed.seed, config.seed.stream + 2 + d});
    row.uniform = u.value;
    row.uniform_error = u.error_bound;
    row.antipodal = energy(antipodal, kind, delta).value;

    row.symmetric_min = std::numeric_limits<double>::infinity();
    row.symmetric_max = -std::numeric_limits<double>::infinity();
    for (const auto& mu : symmetric) {
      const double e = energy(mu, kind, delta).value;
      row.symmetric_min = std::min(row.symmetric_min, e);
      row.symmetric_max = std::max(row.symmetric_max, e);
    }
    row.symmetric_spread = row.symmetric_max - row.symmetric_min;
    row.best_discrete = row.symmetric_max;
    for (const auto& mu : random) row.best_discrete = std::max(row.best_discrete, energy(mu, kind, delta).value);

    const double band = 3.0 * row.uniform_error;
    if (row.uniform - band > row.antipodal && row.uniform + band >= row.best_discrete) {
      row.winner = PhaseWinner::Uniform;
    } else if (row.antipodal - band > row.uniform && row.best_discrete <= row.antipodal + 1e-10) {
      row.winner = PhaseWinner::Antipodal;
    } else if (row.symmetric_spread <= 1e-10 && std::abs(row.uniform - row.antipodal) <= band &&
               row.best_discrete <= row.antipodal + 1e-10) {
      row.winner = PhaseWinner::Tie;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ecc
