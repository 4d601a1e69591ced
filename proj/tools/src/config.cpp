#include "pburgers_cli/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>

#include <fmt/format.h>

#include "pburgers/errors.hpp"

namespace pburgers::cli {
namespace {

using nlohmann::json;

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw InputError(fmt::format("{}: {}", path, msg));
}

void reject_unknown(const json& obj, const std::string& path,
                    std::initializer_list<const char*> allowed) {
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!keys.contains(it.key())) fail(join(path, it.key()), "unknown key");
  }
}

const json& object_at(const json& parent, const std::string& key, const std::string& path) {
  const json& v = parent.at(key);
  if (!v.is_object()) fail(join(path, key), "expected an object");
  return v;
}

double get_double(const json& obj, const std::string& key, const std::string& path,
                  double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) fail(join(path, key), "expected a number");
  return v.get<double>();
}

std::int64_t get_int(const json& obj, const std::string& key, const std::string& path,
                     std::int64_t fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) fail(join(path, key), "expected an integer");
  return v.get<std::int64_t>();
}

int get_count(const json& obj, const std::string& key, const std::string& path, int fallback,
              int min) {
  const std::int64_t v = get_int(obj, key, path, fallback);
  if (v < min || v > 1'000'000'000) fail(join(path, key), fmt::format("must be >= {}", min));
  return static_cast<int>(v);
}

std::uint64_t get_seed(const json& obj, const std::string& key, const std::string& path,
                       std::uint64_t fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    fail(join(path, key), "expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

bool get_bool(const json& obj, const std::string& key, const std::string& path, bool fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_boolean()) fail(join(path, key), "expected a boolean");
  return v.get<bool>();
}

std::string get_string(const json& obj, const std::string& key, const std::string& path,
                       const std::string& fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_string()) fail(join(path, key), "expected a string");
  return v.get<std::string>();
}

void require_positive(double v, const std::string& path) {
  if (!(v > 0.0) || !std::isfinite(v)) fail(path, fmt::format("must be > 0, got {}", v));
}

GridSpec parse_grid(const json& j) {
  const std::string path = "grid";
  reject_unknown(j, path, {"K", "M", "Nt", "Nx", "dealias"});
  if (!j.contains("K")) fail("grid.K", "required");
  if (!j.contains("M")) fail("grid.M", "required");
  const int K = get_count(j, "K", path, 1, 1);
  const int M = get_count(j, "M", path, 1, 1);
  GridSpec g = GridSpec::make(K, M);
  g.Nt = get_count(j, "Nt", path, g.Nt, 1);
  g.Nx = get_count(j, "Nx", path, g.Nx, 1);
  g.dealias = get_double(j, "dealias", path, g.dealias);
  g.validate();
  return g;
}

ForcingSpec parse_forcing(const json& j) {
  const std::string path = "forcing";
  reject_unknown(j, path, {"benchmark", "terms"});
  if (j.contains("benchmark") == j.contains("terms")) {
    fail(path, "exactly one of 'benchmark' or 'terms' is required");
  }
  if (j.contains("benchmark")) {
    return benchmark_forcing(get_string(j, "benchmark", path, ""));
  }
  const json& terms = j.at("terms");
  if (!terms.is_array()) fail("forcing.terms", "expected an array");
  ForcingSpec spec;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tp = fmt::format("forcing.terms[{}]", i);
    const json& t = terms[i];
    if (!t.is_object()) fail(tp, "expected an object");
    const std::string kind = get_string(t, "kind", tp, "");
    if (kind == "modal") {
      reject_unknown(t, tp, {"kind", "a", "k", "m", "phase"});
      ModalTerm m;
      m.a = get_double(t, "a", tp, m.a);
      m.k = get_count(t, "k", tp, m.k, 0);
      m.m = get_count(t, "m", tp, m.m, 1);
      m.phase = get_double(t, "phase", tp, m.phase);
      spec.terms.emplace_back(m);
    } else if (kind == "rough") {
      reject_unknown(t, tp, {"kind", "p", "seed", "cutoff", "amplitude"});
      RoughTerm r;
      r.p = get_double(t, "p", tp, r.p);
      r.seed = get_seed(t, "seed", tp, r.seed);
      r.cutoff = get_count(t, "cutoff", tp, r.cutoff, 0);
      r.amplitude = get_double(t, "amplitude", tp, r.amplitude);
      spec.terms.emplace_back(r);
    } else {
      fail(join(tp, "kind"), "expected 'modal' or 'rough'");
    }
  }
  return spec;
}

SolveConfig parse_solve(const json& j) {
  const std::string path = "solve";
  reject_unknown(j, path,
                 {"newton_tol", "max_newton", "lambda_grid", "lambda_points", "krylov_tol",
                  "krylov_max", "krylov_restart", "continuation"});
  SolveConfig c;
  c.newton_tol = get_double(j, "newton_tol", path, c.newton_tol);
  c.max_newton = get_count(j, "max_newton", path, c.max_newton, 0);
  c.krylov_tol = get_double(j, "krylov_tol", path, c.krylov_tol);
  c.krylov_max = get_count(j, "krylov_max", path, c.krylov_max, 1);
  c.krylov_restart = get_count(j, "krylov_restart", path, c.krylov_restart, 1);
  if (j.contains("lambda_grid") && j.contains("lambda_points")) {
    fail(path, "give either 'lambda_grid' or 'lambda_points', not both");
  }
  if (j.contains("lambda_points")) {
    c.lambda_grid = SolveConfig::uniform_lambda_grid(get_count(j, "lambda_points", path, 21, 2));
  }
  if (j.contains("lambda_grid")) {
    const json& lg = j.at("lambda_grid");
    if (!lg.is_array()) fail("solve.lambda_grid", "expected an array of numbers");
    c.lambda_grid.clear();
    for (const auto& v : lg) {
      if (!v.is_number()) fail("solve.lambda_grid", "expected an array of numbers");
      c.lambda_grid.push_back(v.get<double>());
    }
  }
  const std::string pred = get_string(j, "continuation", path, to_string(c.continuation));
  if (pred == to_string(Predictor::kPreviousSolution)) {
    c.continuation = Predictor::kPreviousSolution;
  } else if (pred == to_string(Predictor::kSecant)) {
    c.continuation = Predictor::kSecant;
  } else {
    fail("solve.continuation", "expected 'previous-solution' or 'secant'");
  }
  c.validate();
  return c;
}

}  // namespace

RunConfig parse_config(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) fail("config", "expected a JSON object");
  reject_unknown(j, "",
                 {"mu", "grid", "forcing", "solve", "seed", "verify", "probe", "colehopf",
                  "oracle"});
  RunConfig c;
  if (!j.contains("mu")) fail("mu", "required");
  c.mu = get_double(j, "mu", "", c.mu);
  require_positive(c.mu, "mu");
  if (j.contains("grid")) c.grid = parse_grid(object_at(j, "grid", ""));
  if (!j.contains("forcing")) fail("forcing", "required");
  c.forcing = parse_forcing(object_at(j, "forcing", ""));
  if (j.contains("solve")) c.solve = parse_solve(object_at(j, "solve", ""));
  c.seed = get_seed(j, "seed", "", c.seed);

  if (j.contains("verify")) {
    const json& v = object_at(j, "verify", "");
    reject_unknown(v, "verify", {"samples", "decay"});
    c.verify.samples = get_count(v, "samples", "verify", c.verify.samples, 1);
    c.verify.decay = get_double(v, "decay", "verify", c.verify.decay);
    require_positive(c.verify.decay, "verify.decay");
  }
  if (j.contains("probe")) {
    const json& v = object_at(j, "probe", "");
    reject_unknown(v, "probe", {"samples"});
    c.probe.samples = get_count(v, "samples", "probe", c.probe.samples, 0);
  }
  if (j.contains("colehopf")) {
    const json& v = object_at(j, "colehopf", "");
    const std::string p = "colehopf";
    reject_unknown(v, p, {"drift", "file", "tol", "steps", "max_iterations", "c", "write_phi"});
    const std::string drift = get_string(v, "drift", p, "solve");
    if (drift == "zero") {
      c.colehopf.drift = DriftSource::kZero;
    } else if (drift == "file") {
      c.colehopf.drift = DriftSource::kFile;
      if (!v.contains("file")) fail("colehopf.file", "required when drift is 'file'");
    } else if (drift == "solve") {
      c.colehopf.drift = DriftSource::kSolve;
    } else {
      fail("colehopf.drift", "expected 'zero', 'file' or 'solve'");
    }
    if (v.contains("file")) {
      std::filesystem::path f = get_string(v, "file", p, "");
      c.colehopf.file = f.is_relative() && !base_dir.empty() ? base_dir / f : f;
    }
    c.colehopf.tol = get_double(v, "tol", p, c.colehopf.tol);
    require_positive(c.colehopf.tol, "colehopf.tol");
    c.colehopf.steps = get_count(v, "steps", p, c.colehopf.steps, 1);
    c.colehopf.max_iterations = get_count(v, "max_iterations", p, c.colehopf.max_iterations, 1);
    if (v.contains("c") && !v.at("c").is_null()) {
      const double s = get_double(v, "c", p, 0.0);
      if (s == 0.0 || !std::isfinite(s)) fail("colehopf.c", "must be finite and nonzero");
      c.colehopf.c = s;
    }
    c.colehopf.write_phi = get_bool(v, "write_phi", p, c.colehopf.write_phi);
  }
  if (c.colehopf.steps < 2 * c.grid.K + 1) {
    fail("colehopf.steps", fmt::format("must be >= 2K+1 = {}", 2 * c.grid.K + 1));
  }
  if (j.contains("oracle")) {
    const json& v = object_at(j, "oracle", "");
    const std::string p = "oracle";
    reject_unknown(v, p, {"n_periods", "steps_per_period", "threshold", "drift_tol",
                          "cfl_limit"});
    c.oracle.n_periods = get_count(v, "n_periods", p, c.oracle.n_periods, 1);
    c.oracle.steps_per_period = get_count(v, "steps_per_period", p, c.oracle.steps_per_period, 1);
    c.oracle.threshold = get_double(v, "threshold", p, c.oracle.threshold);
    require_positive(c.oracle.threshold, "oracle.threshold");
    c.oracle.drift_tol = get_double(v, "drift_tol", p, c.oracle.drift_tol);
    require_positive(c.oracle.drift_tol, "oracle.drift_tol");
    c.oracle.cfl_limit = get_double(v, "cfl_limit", p, c.oracle.cfl_limit);
    require_positive(c.oracle.cfl_limit, "oracle.cfl_limit");
  }
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw InputError(fmt::format("config: cannot open '{}'", path.string()));
  json j;
  try {
    j = json::parse(is);
  } catch (const json::parse_error& e) {
    throw InputError(fmt::format("config: '{}' is not valid JSON: {}", path.string(), e.what()));
  }
  return parse_config(j, path.parent_path());
}

}  // namespace pburgers::cli
