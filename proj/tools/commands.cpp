#include "commands.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "collection_io.hpp"
#include "ecc/energy.hpp"
#include "ecc/error.hpp"
#include "ecc/optimize.hpp"
#include "ecc/series.hpp"
#include "ecc/tensor.hpp"
#include "ecc/welch.hpp"

namespace ecc::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv };

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string num(const std::optional<double>& v) { return v ? num(*v) : std::string(); }

Json opt(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json to_json(const CoherenceBound& b) {
  return Json{{"power_bound", b.power_bound}, {"coherence_bound", b.coherence_bound}, {"vacuous", b.vacuous}};
}

Json to_json(const std::optional<CoherenceBound>& b) { return b ? to_json(*b) : Json(nullptr); }

Json vectors_json(const UnitVectorCollection& z) {
  Json out = Json::array();
  if (z.is_real()) {
    const auto& x = z.real_vectors();
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      Json v = Json::array();
      for (Eigen::Index i = 0; i < x.rows(); ++i) v.push_back(x(i, j));
      out.push_back(std::move(v));
    }
  } else {
    const auto x = z.complex_vectors();
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      Json v = Json::array();
      for (Eigen::Index i = 0; i < x.rows(); ++i) v.push_back(Json::array({x(i, j).real(), x(i, j).imag()}));
      out.push_back(std::move(v));
    }
  }
  return out;
}

const std::map<std::string, Field> kFieldNames{{"real", Field::Real}, {"complex", Field::Complex}};
const std::map<std::string, Format> kFormatNames{{"json", Format::Json}, {"csv", Format::Csv}};
const std::map<std::string, EnergyKind> kKindNames{{"geodesic", EnergyKind::Geodesic},
                                                   {"euclidean", EnergyKind::Euclidean}};

// Every command materializes at least one m x m Gram matrix.
void check_gram_budget(long long m) {
  if (m * m > static_cast<long long>(kMaxTensorEntries))
    fail(ErrorKind::Resource, "Gram matrix for m = " + std::to_string(m) + " exceeds the " +
                                  std::to_string(static_cast<long long>(kMaxTensorEntries)) + "-entry budget");
}

template <class T>
std::vector<std::string> keys(const std::map<std::string, T>& m) {
  std::vector<std::string> out;
  for (const auto& [k, v] : m) out.push_back(k);
  return out;
}

int resolve_threads(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("ECC_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

// --- bounds ---------------------------------------------------------------

struct BoundsArgs {
  int m = 0;
  int n = 0;
  int k_max = 1;
  Field field = Field::Real;
};

void cmd_bounds(const BoundsArgs& a, Format format, std::ostream& out) {
  const auto rows = bound_table(a.m, a.n, a.k_max, a.field);
  if (format == Format::Csv) {
    out << "k,classical_bound,improved_bound,applicable_bound,scaled_bound,"
           "classical_cmax_power,classical_cmax,improved_cmax_power,improved_cmax,cmax_vacuous\n";
    for (const auto& r : rows) {
      const auto& applicable_cmax = r.improved_cmax ? r.improved_cmax : r.classical_cmax;
      out << r.k << ',' << num(r.classical_bound) << ',' << num(r.improved_bound) << ','
          << num(r.applicable_bound) << ',' << num(r.scaled_bound) << ','
          << (r.classical_cmax ? num(r.classical_cmax->power_bound) : "") << ','
          << (r.classical_cmax ? num(r.classical_cmax->coherence_bound) : "") << ','
          << (r.improved_cmax ? num(r.improved_cmax->power_bound) : "") << ','
          << (r.improved_cmax ? num(r.improved_cmax->coherence_bound) : "") << ','
          << (applicable_cmax ? (applicable_cmax->vacuous ? "true" : "false") : "") << '\n';
    }
    return;
  }
  Json doc{{"m", a.m}, {"n", a.n}, {"field", to_string(a.field)}, {"rows", Json::array()}};
  for (const auto& r : rows) {
    doc["rows"].push_back(Json{{"k", r.k},
                               {"classical_bound", r.classical_bound},
                               {"improved_bound", opt(r.improved_bound)},
                               {"applicable_bound", r.applicable_bound},
                               {"scaled_bound", r.scaled_bound},
                               {"classical_cmax", to_json(r.classical_cmax)},
                               {"improved_cmax", to_json(r.improved_cmax)}});
  }
  out << doc.dump(2) << '\n';
}

// --- eval -----------------------------------------------------------------

struct EvalArgs {
  std::string input;
  int k_max = 1;
  bool renormalize = false;
};

void cmd_eval(const EvalArgs& a, Format format, std::istream& in, std::ostream& out) {
  const auto z = io::parse_collection(io::read_input(a.input, in), a.renormalize);
  check_gram_budget(z.size());
  const auto reports = evaluate(z, a.k_max);
  if (format == Format::Csv) {
    out << "k,potential,scaled_potential,classical_bound,improved_bound,applicable_bound,"
           "potential_gap,scaled_gap,coherence,coherence_gap\n";
    for (const auto& r : reports) {
      const double m2 = static_cast<double>(r.m) * r.m;
      out << r.k << ',' << num(r.potential) << ',' << num(r.scaled_potential) << ',' << num(r.classical_bound)
          << ',' << num(r.improved_bound) << ',' << num(r.applicable_bound) << ',' << num(r.potential_gap) << ','
          << num(r.scaled_potential - m2 * r.applicable_bound) << ',' << num(r.coherence) << ','
          << num(r.coherence_gap) << '\n';
    }
    return;
  }
  Json doc{{"m", z.size()},
           {"n", z.dim()},
           {"field", to_string(z.field())},
           {"coherence", reports.empty() ? Json(nullptr) : opt(reports[0].coherence)},
           {"reports", Json::array()}};
  for (const auto& r : reports) {
    const double m2 = static_cast<double>(r.m) * r.m;
    doc["reports"].push_back(Json{{"k", r.k},
                                  {"potential", r.potential},
                                  {"scaled_potential", r.scaled_potential},
                                  {"classical_bound", r.classical_bound},
                                  {"improved_bound", opt(r.improved_bound)},
                                  {"applicable_bound", r.applicable_bound},
                                  {"scaled_bound", m2 * r.applicable_bound},
                                  {"potential_gap", r.potential_gap},
                                  {"scaled_gap", r.scaled_potential - m2 * r.applicable_bound},
                                  {"classical_cmax", to_json(r.classical_cmax)},
                                  {"improved_cmax", to_json(r.improved_cmax)},
                                  {"coherence_gap", opt(r.coherence_gap)}});
  }
  out << doc.dump(2) << '\n';
}

// --- optimize -------------------------------------------------------------

struct OptimizeArgs {
  OptimizeConfig config;
  std::string warm_start;
  int threads = 0;
};

void cmd_optimize(OptimizeArgs a, Format format, std::istream& in, std::ostream& out) {
  check_gram_budget(a.config.m);
  if (!a.warm_start.empty()) {
    const auto start = io::parse_collection(io::read_input(a.warm_start, in), true);
    a.config.warm_start = start.real_vectors();
  }
  a.config.threads = resolve_threads(a.threads);
  const auto r = minimize_potential(a.config);
  const double m2 = static_cast<double>(a.config.m) * a.config.m;
  if (format == Format::Csv) {
    out << "m,n,k,potential,scaled_potential,bound,scaled_bound,gap,iterations,converged,best_restart\n";
    out << a.config.m << ',' << a.config.n << ',' << a.config.k << ',' << num(r.potential) << ','
        << num(r.scaled_potential) << ',' << num(r.bound) << ',' << num(m2 * r.bound) << ',' << num(r.gap) << ','
        << r.iterations << ',' << (r.converged ? "true" : "false") << ',' << r.best_restart << '\n';
    return;
  }
  Json doc{{"m", a.config.m},
           {"n", a.config.n},
           {"k", a.config.k},
           {"restarts", a.config.restarts},
           {"seed", a.config.seed.seed},
           {"potential", r.potential},
           {"scaled_potential", r.scaled_potential},
           {"bound", r.bound},
           {"scaled_bound", m2 * r.bound},
           {"gap", r.gap},
           {"iterations", r.iterations},
           {"converged", r.converged},
           {"best_restart", r.best_restart},
           {"gradient_norm", r.gradient_norm},
           {"vectors", vectors_json(r.vectors)}};
  out << doc.dump(2) << '\n';
}

// --- energy ---------------------------------------------------------------

struct EnergyArgs {
  EnergyKind kind = EnergyKind::Geodesic;
  double delta = 1.0;
  int n = 3;
  std::string measure = "antipodal";
  std::string input;
  long long samples = 1'000'000;
  std::uint64_t seed = 0;
  std::string method = "pairwise";
  int order = 256;
  bool renormalize = false;
};

void cmd_energy(const EnergyArgs& a, Format format, std::istream& in, std::ostream& out) {
  EnergyResult result;
  int n = a.n;
  if (a.measure == "uniform") {
    result = uniform_energy(a.n, a.kind, a.delta, a.samples, {a.seed, 0});
  } else {
    std::optional<DiscreteMeasure> mu;
    if (a.measure == "antipodal") {
      if (a.n < 1) fail(ErrorKind::InvalidInput, "--n must be >= 1");
      mu = DiscreteMeasure::antipodal(Eigen::VectorXd::Unit(a.n, 0));
    } else {
      if (a.input.empty()) fail(ErrorKind::InvalidInput, "--measure file needs --input");
      mu.emplace(io::parse_collection(io::read_input(a.input, in), a.renormalize));
      n = mu->dim();
      check_gram_budget(mu->support().cols());
    }
    if (a.method == "series") {
      const PowerSeries f = a.kind == EnergyKind::Geodesic ? arccos_power_series(a.delta, a.order)
                                                           : chord_power_series(a.delta, a.order);
      result = series_energy(*mu, f, tail_bound(f, 0.0));
    } else {
      result = energy(*mu, a.kind, a.delta);
    }
  }
  if (format == Format::Csv) {
    out << "kind,delta,n,measure,value,method,error_bound\n"
        << to_string(a.kind) << ',' << num(a.delta) << ',' << n << ',' << a.measure << ',' << num(result.value)
        << ',' << to_string(result.method) << ',' << num(result.error_bound) << '\n';
    return;
  }
  Json doc{{"kind", to_string(a.kind)},
           {"delta", a.delta},
           {"n", n},
           {"measure", a.measure},
           {"value", result.value},
           {"method", to_string(result.method)},
           {"error_bound", result.error_bound}};
  out << doc.dump(2) << '\n';
}

// --- phase ----------------------------------------------------------------

struct PhaseArgs {
  EnergyKind kind = EnergyKind::Geodesic;
  int n = 3;
  std::vector<double> deltas;
  PhaseConfig config;
};

void cmd_phase(const PhaseArgs& a, Format format, std::ostream& out) {
  const auto rows = phase_transition_experiment(a.kind, a.n, a.deltas, a.config);
  if (format == Format::Csv) {
    out << "delta,uniform,uniform_error,antipodal,best_discrete,symmetric_min,symmetric_max,winner\n";
    for (const auto& r : rows)
      out << num(r.delta) << ',' << num(r.uniform) << ',' << num(r.uniform_error) << ',' << num(r.antipodal) << ','
          << num(r.best_discrete) << ',' << num(r.symmetric_min) << ',' << num(r.symmetric_max) << ','
          << to_string(r.winner) << '\n';
    return;
  }
  Json doc{{"kind", to_string(a.kind)},
           {"n", a.n},
           {"critical_exponent", critical_exponent(a.kind)},
           {"rows", Json::array()}};
  for (const auto& r : rows)
    doc["rows"].push_back(Json{{"delta", r.delta},
                               {"uniform", r.uniform},
                               {"uniform_error", r.uniform_error},
                               {"antipodal", r.antipodal},
                               {"best_discrete", r.best_discrete},
                               {"symmetric_min", r.symmetric_min},
                               {"symmetric_max", r.symmetric_max},
                               {"winner", to_string(r.winner)}});
  out << doc.dump(2) << '\n';
}

// --- series ---------------------------------------------------------------

struct SeriesArgs {
  std::string function = "arccos";
  double delta = 1.0;
  int order = 10;
};

void cmd_series(const SeriesArgs& a, Format format, std::ostream& out) {
  PowerSeries s = a.function == "arccos"       ? series_arccos(a.order)
                  : a.function == "arccos-pow" ? arccos_power_series(a.delta, a.order)
                                               : chord_power_series(a.delta, a.order);
  if (format == Format::Json) {
    Json doc{{"function", a.function}, {"delta", a.delta}, {"order", a.order}, {"coefficients", s.coeffs()}};
    out << doc.dump(2) << '\n';
    return;
  }
  out << "k,coefficient\n";
  for (int k = 0; k <= s.order(); ++k) out << k << ',' << num(s[k]) << '\n';
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return kParse;
    case ErrorKind::Validation: return kValidation;
    case ErrorKind::Resource: return kResource;
    default: return kUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eccentricity tensors, Welch bounds, frame potentials and sphere energies"};
  app.require_subcommand(1);

  Format format = Format::Json;
  BoundsArgs bounds;
  auto* b = app.add_subcommand("bounds", "Welch-type lower bounds for m vectors in dimension n");
  b->add_option("--m", bounds.m, "Number of vectors")->required()->check(CLI::PositiveNumber);
  b->add_option("--n", bounds.n, "Dimension")->required()->check(CLI::PositiveNumber);
  b->add_option("--k-max", bounds.k_max, "Largest exponent k")->check(CLI::PositiveNumber);
  std::string field_name = "real";
  b->add_option("--field", field_name, "real or complex")->check(CLI::IsMember(keys(kFieldNames)));

  EvalArgs eval;
  auto* e = app.add_subcommand("eval", "Coherence, frame potentials and bound gaps of a collection");
  e->add_option("--input", eval.input, "CSV/JSON collection file, or - for stdin")->required();
  e->add_option("--k-max", eval.k_max, "Largest exponent k")->check(CLI::PositiveNumber);
  e->add_flag("--renormalize", eval.renormalize, "Rescale vectors to unit length");

  OptimizeArgs optimize;
  auto* o = app.add_subcommand("optimize", "Minimize the 2k-frame potential over m unit vectors in R^n");
  o->add_option("--m", optimize.config.m)->required()->check(CLI::PositiveNumber);
  o->add_option("--n", optimize.config.n)->required()->check(CLI::PositiveNumber);
  o->add_option("--k", optimize.config.k)->required()->check(CLI::PositiveNumber);
  o->add_option("--restarts", optimize.config.restarts)->check(CLI::PositiveNumber);
  o->add_option("--seed", optimize.config.seed.seed);
  o->add_option("--max-iters", optimize.config.max_iters)->check(CLI::NonNegativeNumber);
  o->add_option("--step", optimize.config.step)->check(CLI::PositiveNumber);
  o->add_option("--tol-grad", optimize.config.tol_grad)->check(CLI::PositiveNumber);
  o->add_option("--warm-start", optimize.warm_start, "Starting collection file");
  o->add_option("--threads", optimize.threads, "Worker threads (default: ECC_THREADS or 1)");

  EnergyArgs energy_args;
  auto* en = app.add_subcommand("energy", "Geodesic or Euclidean energy of a measure on the sphere");
  std::string energy_kind;
  en->add_option("--kind", energy_kind, "geodesic or euclidean")->required()->check(CLI::IsMember(keys(kKindNames)));
  en->add_option("--delta", energy_args.delta)->required()->check(CLI::PositiveNumber);
  en->add_option("--n", energy_args.n)->check(CLI::PositiveNumber);
  en->add_option("--measure", energy_args.measure)->check(CLI::IsMember({"uniform", "antipodal", "file"}));
  en->add_option("--input", energy_args.input, "Collection file for --measure file");
  en->add_option("--samples", energy_args.samples)->check(CLI::Range(2LL, 1'000'000'000LL));
  en->add_option("--seed", energy_args.seed);
  en->add_option("--method", energy_args.method, "pairwise or series")->check(CLI::IsMember({"pairwise", "series"}));
  en->add_option("--order", energy_args.order, "Series truncation order")->check(CLI::PositiveNumber);
  en->add_flag("--renormalize", energy_args.renormalize);

  PhaseArgs phase;
  auto* ph = app.add_subcommand("phase", "Uniform vs antipodal energy maximizers across exponents");
  std::string phase_kind;
  ph->add_option("--kind", phase_kind, "geodesic or euclidean")->required()->check(CLI::IsMember(keys(kKindNames)));
  ph->add_option("--n", phase.n)->check(CLI::PositiveNumber);
  ph->add_option("--deltas", phase.deltas, "Comma-separated exponents in (0, 4]")->required()->delimiter(',');
  ph->add_option("--samples", phase.config.samples)->check(CLI::Range(2LL, 1'000'000'000LL));
  ph->add_option("--candidates", phase.config.candidates)->check(CLI::NonNegativeNumber);
  ph->add_option("--seed", phase.config.seed.seed);

  SeriesArgs series;
  auto* s = app.add_subcommand("series", "Taylor coefficients at 0 of the energy kernels");
  s->add_option("--function", series.function)->check(CLI::IsMember({"arccos", "arccos-pow", "euclid-pow"}));
  s->add_option("--delta", series.delta)->check(CLI::PositiveNumber);
  s->add_option("--order", series.order)->check(CLI::PositiveNumber);

  // series tables are flat, so they default to CSV; everything else nests.
  std::string format_name;
  for (auto* sub : {b, e, o, en, ph, s})
    sub->add_option("--format", format_name, "json or csv")->check(CLI::IsMember(keys(kFormatNames)));

  std::vector<const char*> argv{"ecc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  }

  if (!format_name.empty()) format = kFormatNames.at(format_name);
  else if (s->parsed()) format = Format::Csv;
  bounds.field = kFieldNames.at(field_name);
  if (!energy_kind.empty()) energy_args.kind = kKindNames.at(energy_kind);
  if (!phase_kind.empty()) phase.kind = kKindNames.at(phase_kind);

  try {
    if (b->parsed()) cmd_bounds(bounds, format, out);
    else if (e->parsed()) cmd_eval(eval, format, in, out);
    else if (o->parsed()) cmd_optimize(optimize, format, in, out);
    else if (en->parsed()) cmd_energy(energy_args, format, in, out);
    else if (ph->parsed()) cmd_phase(phase, format, out);
    else if (s->parsed()) cmd_series(series, format, out);
  } catch (const Error& ex) {
    err << "error (" << to_string(ex.kind()) << "): " << ex.what() << '\n';
    return exit_code_for(ex.kind());
  }
  return kOk;
}

}  // namespace ecc::cli
