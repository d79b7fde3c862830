// Copyright 2026 The twopoint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/app.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cli/config.hpp"
#include "cli/verify.hpp"
#include "twopoint/mass_center.hpp"

namespace twopoint::cli {
namespace {

using nlohmann::json;

std::string num(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

struct Args {
  std::string space;
  int n = 2;
  double radius = 1.0;
  double m1 = 1.0, m2 = 1.0, alpha = 0.5;
  double r = 0.5, rho = 1.0;
  std::string kind = "r1";
  std::string config, output, format;
  std::string scope = "all";
  bool inject_fault = false;
};

SpaceSpec space_from(const Args& a) {
  const auto f = parse_family(a.space);
  if (!f) throw ConfigError("unknown space '" + a.space + "'");
  return make_space(*f, a.n, a.radius);
}

// Writes to --output when given, stdout otherwise.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw ConfigError("cannot open '" + path + "' for writing");
    out_ = &file_;
  }
  std::ostream& operator*() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

using Row = std::vector<std::pair<std::string, std::string>>;

void emit(std::ostream& out, const std::string& format, const std::vector<Row>& rows) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& row : rows) {
      json obj = json::object();
      for (const auto& [k, v] : row) {
        char* end = nullptr;
        const double d = std::strtod(v.c_str(), &end);
        if (!v.empty() && *end == '\0') obj[k] = d;
        else obj[k] = v;
      }
      arr.push_back(obj);
    }
    out << (rows.size() == 1 ? arr[0] : arr).dump(2) << "\n";
  } else if (format == "csv") {
    for (std::size_t i = 0; i < rows[0].size(); ++i) out << (i ? "," : "") << rows[0][i].first;
    out << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i].second;
      out << "\n";
    }
  } else {
    std::vector<std::size_t> width(rows[0].size());
    for (std::size_t i = 0; i < width.size(); ++i) {
      width[i] = rows[0][i].first.size();
      for (const auto& row : rows) width[i] = std::max(width[i], row[i].second.size());
    }
    for (std::size_t i = 0; i < width.size(); ++i)
      out << std::left << std::setw(static_cast<int>(width[i]) + 2) << rows[0][i].first;
    out << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < width.size(); ++i)
        out << std::left << std::setw(static_cast<int>(width[i]) + 2) << row[i].second;
      out << "\n";
    }
  }
}

void check_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  throw ConfigError("unsupported format '" + f + "'");
}

int cmd_catalog(const Args& a, std::ostream& out) {
  const std::string format = a.format.empty() ? "table" : a.format;
  check_format(format, {"table", "csv", "json"});
  std::vector<Row> rows;
  for (Family f : all_families()) {
    const auto s = make_space(f, std::min(a.n, max_dimension(f)), a.radius);
    const std::string hi = s.r_interval.bounded() ? num(s.r_interval.upper) : "inf";
    rows.push_back({{"family", std::string(family_name(f))},
                    {"n", std::to_string(s.n)},
                    {"q1", std::to_string(s.q1)},
                    {"q2", std::to_string(s.q2)},
                    {"dim", std::to_string(s.real_dimension())},
                    {"compact", s.compact ? "yes" : "no"},
                    {"r_interval", "(0, " + hi + ")"}});
  }
  Sink sink(a.output, out);
  emit(*sink, format, rows);
  return kOk;
}

int cmd_coeffs(const Args& a, std::ostream& out) {
  const std::string format = a.format.empty() ? "table" : a.format;
  check_format(format, {"table", "csv", "json"});
  const auto s = space_from(a);
  TwoBodyParams p{a.m1, a.m2, a.alpha, Potential::free()};
  p.validate();
  const auto g = gamma_blocks(s, p, a.r);
  const auto c = inverse_coeffs(s, p, a.r);
  const auto op = radial_operator(s, p, a.r);
  const std::pair<const char*, double> values[] = {
      {"r", a.r},         {"a", g.a},     {"b", g.b},     {"c", g.c},
      {"d", g.d},         {"h", g.h},     {"f", g.f},     {"u", g.u},
      {"w", g.w},         {"v", g.v},     {"g00", c.g00}, {"g01", c.g01},
      {"g11", c.g11},     {"D", c.D},     {"E", c.E},     {"F", c.F},
      {"C", c.C},         {"B", c.B},     {"A", c.A},
      {"nu", measure_density(s, a.r)},    {"A2", op.A2},  {"A1", op.A1},
      {"det_gamma", gamma_det_closed(s, p, a.r)},
  };
  Sink sink(a.output, out);
  if (format == "table") {
    std::vector<Row> rows;
    for (const auto& [k, v] : values) rows.push_back({{"name", k}, {"value", num(v)}});
    emit(*sink, format, rows);
  } else {
    Row row;
    for (const auto& [k, v] : values) row.emplace_back(k, num(v));
    emit(*sink, format, {row});
  }
  return kOk;
}

int cmd_masscenter(const Args& a, std::ostream& out) {
  const std::string format = a.format.empty() ? "table" : a.format;
  check_format(format, {"table", "json"});
  const CenterQuery q{space_from(a), a.m1, a.m2, a.rho};
  Row row{{"kind", a.kind}};
  if (a.kind == "r1") {
    const double r1 = center_r1(q);
    row.insert(row.end(), {{"rho1", num(r1)}, {"rho2", num(a.rho - r1)}});
  } else if (a.kind == "r2") {
    const auto c = center_r2(q);
    row.insert(row.end(), {{"rho1", num(c.rho1)},
                           {"rho2", num(c.rho2)},
                           {"effective_mass", num(c.effective_mass)}});
  } else if (a.kind == "r3") {
    const double r3 = center_r3(q);
    row.insert(row.end(), {{"rho1", num(r3)}, {"rho2", num(a.rho - r3)}});
  } else {
    throw ConfigError("unknown kind '" + a.kind + "' (r1, r2, r3)");
  }
  Sink sink(a.output, out);
  if (format == "json") {
    emit(*sink, format, {row});
  } else {
    for (const auto& [k, v] : row) *sink << k << " = " << v << "\n";
  }
  return kOk;
}

void write_trajectory(std::ostream& out, const std::string& format, const Trajectory& t,
                      const std::vector<std::string>& names) {
  std::vector<std::string> cols{"t", "r", "p_r", "energy", "casimir", "geodesic_residual"};
  cols.insert(cols.end(), names.begin(), names.end());
  auto values = [&](std::size_t i) {
    std::vector<double> v{t.t[i], t.states[i].r, t.states[i].p_r, t.energy[i], t.casimir[i],
                          t.geodesic_residual[i]};
    for (int k = 0; k < t.states[i].mu.size(); ++k) v.push_back(t.states[i].mu(k));
    return v;
  };
  if (format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < t.size(); ++i) rows.push_back(values(i));
    out << json{{"columns", cols}, {"rows", rows}}.dump() << "\n";
    return;
  }
  out << std::setprecision(17);
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << "\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto v = values(i);
    for (std::size_t k = 0; k < v.size(); ++k) out << (k ? "," : "") << v[k];
    out << "\n";
  }
}

int cmd_simulate(const Args& a, std::ostream& out, std::ostream& err) {
  if (a.config.empty()) throw ConfigError("simulate needs --config");
  RunConfig cfg = load_config(a.config);
  if (!a.output.empty()) cfg.output_path = a.output;
  if (!a.format.empty()) cfg.format = a.format;
  check_format(cfg.format, {"csv", "json"});
  if (cfg.output_path.empty()) throw ConfigError("no output path (config [output] path or --output)");

  const ReducedSystem sys(build_adapted_basis(cfg.space), cfg.params);
  const auto names = sys.basis().component_names();
  PhaseState s0 = sys.make_state(cfg.r, cfg.p_r);
  for (const auto& [name, value] : cfg.mu) {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw ConfigError("[initial] " + name + " is not a momentum of this space");
    s0.mu(static_cast<int>(it - names.begin())) = value;
  }

  Trajectory traj;
  std::string reason = "completed", message;
  int code = kOk;
  try {
    traj = integrate(sys, s0, cfg.integrator);
  } catch (const BoundaryReached& e) {
    traj = e.partial();
    reason = "boundary_reached";
    message = e.what();
    code = kBoundaryReached;
  } catch (const NonFiniteState& e) {
    traj = e.partial();
    reason = "non_finite_state";
    message = e.what();
    code = kNonFinite;
  }

  {
    std::ofstream file(cfg.output_path);
    if (!file) throw ConfigError("cannot open '" + cfg.output_path + "' for writing");
    write_trajectory(file, cfg.format, traj, names);
  }

  double mu_other = 0.0;
  for (const auto& st : traj.states)
    for (int k = 1; k < st.mu.size(); ++k) mu_other = std::max(mu_other, std::abs(st.mu(k)));
  json summary{
      {"command", "simulate"},
      {"config", a.config},
      {"output", cfg.output_path},
      {"format", cfg.format},
      {"family", std::string(family_name(cfg.space.family))},
      {"n", cfg.space.n},
      {"radius", cfg.space.R},
      {"m1", cfg.params.m1},
      {"m2", cfg.params.m2},
      {"alpha", cfg.params.alpha},
      {"potential", std::string(potential_kind_name(cfg.params.potential.kind()))},
      {"dt", cfg.integrator.dt},
      {"t_end", cfg.integrator.t_end},
      {"samples", traj.size()},
      {"t_final", traj.size() ? traj.t.back() : 0.0},
      {"exit_reason", reason},
      {"energy_drift", traj.energy_drift()},
      {"casimir_drift", traj.casimir_drift()},
      {"max_geodesic_residual", traj.max_geodesic_residual()},
      {"max_abs_mu_other", mu_other},
  };
  if (!message.empty()) summary["message"] = message;
  out << summary.dump(2) << "\n";
  std::ofstream(cfg.output_path + ".summary.json") << summary.dump(2) << "\n";
  if (code != kOk) err << "simulate: " << message << "\n";
  return code;
}

int cmd_verify(const Args& a, std::ostream& out) {
  const auto rows = run_verify(a.scope, VerifyOptions{a.inject_fault});
  std::vector<Row> table;
  int failed = 0;
  for (const auto& r : rows) {
    failed += !r.passed();
    std::ostringstream res, tol;
    res << std::scientific << std::setprecision(3) << r.residual;
    tol << std::scientific << std::setprecision(1) << r.tolerance;
    table.push_back({{"scope", r.scope},
                     {"check", r.name},
                     {"residual", res.str()},
                     {"tolerance", tol.str()},
                     {"status", r.passed() ? "ok" : "FAIL"}});
  }
  const std::string format = a.format.empty() ? "table" : a.format;
  check_format(format, {"table", "csv", "json"});
  Sink sink(a.output, out);
  if (!table.empty()) emit(*sink, format, table);
  if (format == "table")
    *sink << rows.size() << " checks, " << failed << " failed\n";
  return failed ? kVerifyFailed : kOk;
}

void add_space(CLI::App* sub, Args& a, bool required) {
  auto* o = sub->add_option("--space", a.space, "Space family, e.g. sphere, complex-hyperbolic");
  if (required) o->required();
  sub->add_option("--n", a.n, "Dimension over the base field");
  sub->add_option("--radius", a.radius, "Curvature radius R");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Args a;
  CLI::App app{"Reduced two-body problem on two-point homogeneous spaces", "twopoint"};
  app.require_subcommand(1);

  auto* catalog = app.add_subcommand("catalog", "List the space families");
  catalog->add_option("--n", a.n, "Dimension used for (q1, q2)");
  catalog->add_option("--radius", a.radius, "Curvature radius R");

  auto* coeffs = app.add_subcommand("coeffs", "Metric blocks and radial coefficients at r");
  add_space(coeffs, a, true);
  coeffs->add_option("--m1", a.m1);
  coeffs->add_option("--m2", a.m2);
  coeffs->add_option("--alpha", a.alpha);
  coeffs->add_option("--r", a.r)->required();

  auto* simulate = app.add_subcommand("simulate", "Integrate a configured trajectory");
  simulate->add_option("--config", a.config)->required();

  auto* mc = app.add_subcommand("masscenter", "Mass center of two particles");
  add_space(mc, a, true);
  mc->add_option("--m1", a.m1);
  mc->add_option("--m2", a.m2);
  mc->add_option("--rho", a.rho)->required();
  mc->add_option("--kind", a.kind, "r1, r2 or r3");

  auto* verify = app.add_subcommand("verify", "Run the invariant battery");
  verify->add_option("--scope", a.scope, "algebra, coeffs, dynamics, masscenter or all");
  verify->add_flag("--inject-fault", a.inject_fault)->group("");

  for (auto* sub : {catalog, coeffs, simulate, mc, verify}) {
    sub->add_option("--output", a.output, "Output file");
    sub->add_option("--format", a.format, "table, csv or json");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (catalog->parsed()) return cmd_catalog(a, out);
    if (coeffs->parsed()) return cmd_coeffs(a, out);
    if (simulate->parsed()) return cmd_simulate(a, out, err);
    if (mc->parsed()) return cmd_masscenter(a, out);
    return cmd_verify(a, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kBadInput;
}

}  // namespace twopoint::cli
