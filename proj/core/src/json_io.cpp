#include "pburgers/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "pburgers/errors.hpp"
#include "pburgers/torus_spectral.hpp"

namespace pburgers {

Json to_json(const EstimateReport& r) {
  Json j;
  j["lambda"] = r.lambda;
  j["mu"] = r.mu;
  j["norm_l2"] = r.norm_l2;
  j["norm_ux"] = r.norm_ux;
  j["norm_dthalf"] = r.norm_dthalf;
  j["norm_h"] = r.norm_h;
  j["f_dual"] = r.f_dual;
  j["f_pairing"] = r.f_pairing;
  j["energy_residual"] = r.energy_residual;
  j["cubic_residual"] = r.cubic_residual;
  j["norm_u_squared"] = r.norm_u_squared;
  j["convection_pairing"] = r.convection_pairing;
  j["step3_lhs"] = r.step3_lhs;
  j["step3_rhs"] = r.step3_rhs;
  j["ux_bound"] = r.ux_bound;
  j["bound_ux_ok"] = r.bound_ux_ok;
  j["c_emp"] = r.c_emp;
  j["dt_bound"] = r.dt_bound;
  j["bound_dt_ok"] = r.bound_dt_ok;
  j["newton_iters"] = r.newton_iters;
  j["final_residual"] = r.final_residual;
  return j;
}

Json to_json(const Branch& b) {
  Json entries = Json::array();
  for (const auto& e : b.entries) entries.push_back(to_json(e.report));
  Json j;
  j["sup_h_norm"] = b.sup_h_norm;
  j["entries"] = std::move(entries);
  return j;
}

Json to_json(const NormReport& r) {
  Json j;
  j["l2"] = r.l2;
  Json hs = Json::object();
  for (const auto& [s, v] : r.hs_time) hs[fmt::format("{}", s)] = v;
  j["hs_time"] = std::move(hs);
  j["hx"] = r.hx;
  j["h_space_time"] = r.h_space_time;
  j["l4"] = r.l4;
  j["dual_fnorm"] = r.dual_fnorm ? Json(*r.dual_fnorm) : Json(nullptr);
  return j;
}

Json to_json(const GroundState& g) {
  const auto& c = g.certificate;
  Json cert;
  cert["K_near_zero"] = c.K_near_zero;
  cert["phi_near_constant"] = c.phi_near_constant;
  cert["K_residual"] = c.K_residual;
  cert["phi_residual"] = c.phi_residual;
  cert["pde_residual"] = c.pde_residual;
  cert["neumann_residual"] = c.neumann_residual;
  cert["min_phi"] = c.min_phi;
  cert["holds"] = c.holds();
  Json j;
  j["K"] = g.K;
  j["rho"] = g.rho;
  j["rho2"] = g.rho2;
  j["spectral_gap"] = g.spectral_gap;
  j["iterations"] = g.iterations;
  j["rho_history"] = g.rho_history;
  j["certificate"] = std::move(cert);
  return j;
}

Json to_json(const InvariantResult& r) {
  Json j;
  j["module"] = r.module;
  j["name"] = r.name;
  j["samples"] = r.samples;
  j["max_residual"] = r.max_residual;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  return j;
}

Json to_json(const std::vector<InvariantResult>& results) {
  Json arr = Json::array();
  bool all = true;
  for (const auto& r : results) {
    arr.push_back(to_json(r));
    all = all && r.pass;
  }
  Json j;
  j["pass"] = all;
  j["invariants"] = std::move(arr);
  return j;
}

namespace {

void dump(const Json& j, int indent, int depth, std::string& out) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        dump(it.value(), indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        dump(v, indent, depth + 1, out);
      }
      newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? fmt::format("{:.17g}", v) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump_deterministic(const Json& j, int indent) {
  std::string out;
  dump(j, indent, 0, out);
  return out;
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream os(path);
  if (!os) throw InputError(fmt::format("cannot open {} for writing", path.string()));
  os << dump_deterministic(j) << '\n';
}

void write_field_csv(const std::filesystem::path& path, const Field& u) {
  std::ofstream os(path);
  if (!os) throw InputError(fmt::format("cannot open {} for writing", path.string()));
  const Samples s = synthesize(u);
  const GridSpec& g = u.grid();
  os << "t,x,u\n";
  for (int i = 0; i < s.nt; ++i) {
    for (int j = 0; j < s.nx; ++j) {
      os << fmt::format("{:.17g},{:.17g},{:.17g}\n", g.t(i), g.x(j), s(i, j));
    }
  }
}

Field read_field_csv(const std::filesystem::path& path, const GridSpec& grid, Basis basis) {
  std::ifstream is(path);
  if (!is) throw InputError(fmt::format("{}: cannot open", path.string()));
  std::string line;
  if (!std::getline(is, line) || line.rfind("t,x,u", 0) != 0) {
    throw InputError(fmt::format("{}: expected header 't,x,u'", path.string()));
  }
  const std::size_t n = static_cast<std::size_t>(grid.Nt) * grid.Nx;
  std::vector<double> values;
  values.reserve(n);
  int row = 1;
  while (std::getline(is, line)) {
    ++row;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell[3];
    for (auto& c : cell) {
      if (!std::getline(ls, c, ',')) {
        throw InputError(fmt::format("{}:{}: expected three columns", path.string(), row));
      }
    }
    const std::size_t idx = values.size();
    const int i = static_cast<int>(idx / grid.Nx), j = static_cast<int>(idx % grid.Nx);
    try {
      const double t = std::stod(cell[0]), x = std::stod(cell[1]);
      if (idx >= n || std::abs(t - grid.t(i)) > 1e-12 || std::abs(x - grid.x(j)) > 1e-12) {
        throw InputError(
            fmt::format("{}:{}: point does not match the configured grid", path.string(), row));
      }
      values.push_back(std::stod(cell[2]));
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const InputError*>(&e)) throw;
      throw InputError(fmt::format("{}:{}: malformed number", path.string(), row));
    }
  }
  if (values.size() != n) {
    throw InputError(fmt::format("{}: expected {} rows, found {}", path.string(), n,
                                 values.size()));
  }
  return analyze(values, grid, basis);
}

}  // namespace pburgers
