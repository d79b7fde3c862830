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

#include "cli/config.hpp"

#include <charconv>
#include <cmath>
#include <set>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace twopoint::cli {
namespace {

namespace pt = boost::property_tree;

const std::map<std::string, std::set<std::string>>& fixed_keys() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"space", {"family", "n", "radius"}},
      {"particles", {"m1", "m2", "alpha"}},
      {"potential", {"kind", "gamma", "k", "distances", "values"}},
      {"initial", {"r", "p_r"}},
      {"integrator", {"dt", "t_end", "sample_every"}},
      {"output", {"path", "format"}},
  };
  return keys;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

class Section {
 public:
  Section(const pt::ptree* tree, std::string name) : tree_(tree), name_(std::move(name)) {}

  bool has(const std::string& key) const {
    return tree_ && tree_->find(key) != tree_->not_found();
  }
  std::string text(const std::string& key) const {
    return trim(tree_->get<std::string>(key));
  }
  double number(const std::string& key) const {
    return parse_number(text(key), where(key));
  }
  double number(const std::string& key, double fallback) const {
    return has(key) ? number(key) : fallback;
  }
  int integer(const std::string& key, int fallback) const {
    if (!has(key)) return fallback;
    const std::string t = text(key);
    int v = 0;
    const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || end != t.data() + t.size() || t.empty())
      throw ConfigError(where(key) + ": expected an integer, got '" + t + "'");
    return v;
  }
  std::string where(const std::string& key) const { return "[" + name_ + "] " + key; }
  const pt::ptree* tree() const { return tree_; }

 private:
  const pt::ptree* tree_;
  std::string name_;
};

Potential read_potential(const Section& s) {
  const std::string kind = s.has("kind") ? s.text("kind") : "free";
  auto only = [&](std::set<std::string> allowed) {
    if (!s.tree()) return;
    for (const auto& [key, _] : *s.tree())
      if (key != "kind" && !allowed.count(key))
        throw ConfigError(s.where(key) + " does not apply to kind '" + kind + "'");
  };
  if (kind == "free") {
    only({});
    return Potential::free();
  }
  if (kind == "cotangent") {
    only({"gamma"});
    return Potential::cotangent(s.number("gamma", 1.0));
  }
  if (kind == "harmonic") {
    only({"k"});
    return Potential::harmonic(s.number("k", 1.0));
  }
  if (kind == "tabulated") {
    only({"distances", "values"});
    if (!s.has("distances") || !s.has("values"))
      throw ConfigError("[potential] tabulated needs distances and values");
    return Potential::tabulated(parse_list(s.text("distances"), s.where("distances")),
                                parse_list(s.text("values"), s.where("values")));
  }
  throw ConfigError(s.where("kind") + ": unknown potential '" + kind + "'");
}

}  // namespace

double parse_number(const std::string& text, const std::string& where) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || end != t.data() + t.size() || !std::isfinite(v))
    throw ConfigError(where + ": expected a finite number, got '" + t + "'");
  return v;
}

std::vector<double> parse_list(const std::string& text, const std::string& where) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto next = text.find(',', pos);
    const auto piece = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    out.push_back(parse_number(piece, where));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

RunConfig load_config(const std::string& path) {
  pt::ptree tree;
  try {
    pt::ini_parser::read_ini(path, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(e.what());
  }

  for (const auto& [name, body] : tree) {
    const auto known = fixed_keys().find(name);
    if (known == fixed_keys().end()) throw ConfigError("unknown section [" + name + "]");
    if (!body.data().empty() && body.empty())
      throw ConfigError("key '" + name + "' outside any section");
    // [initial] also takes momentum names; [potential] keys depend on kind.
    if (name == "initial" || name == "potential") continue;
    for (const auto& [key, _] : body)
      if (!known->second.count(key)) throw ConfigError("unknown key [" + name + "] " + key);
  }
  auto section = [&](const std::string& name) {
    const auto it = tree.find(name);
    return Section(it == tree.not_found() ? nullptr : &it->second, name);
  };
  const Section space = section("space"), particles = section("particles"),
                potential = section("potential"), initial = section("initial"),
                integrator = section("integrator"), output = section("output");

  RunConfig cfg;
  try {
    if (!space.has("family")) throw ConfigError("[space] family is required");
    const auto family = parse_family(space.text("family"));
    if (!family) throw ConfigError("[space] family: unknown '" + space.text("family") + "'");
    if (!space.has("n")) throw ConfigError("[space] n is required");
    cfg.space = make_space(*family, space.integer("n", 2), space.number("radius", 1.0));

    if (!particles.has("m1") || !particles.has("m2"))
      throw ConfigError("[particles] m1 and m2 are required");
    cfg.params.m1 = particles.number("m1");
    cfg.params.m2 = particles.number("m2");
    cfg.params.alpha = particles.number(
        "alpha", cfg.params.m2 / (cfg.params.m1 + cfg.params.m2));
    cfg.params.potential = read_potential(potential);
    cfg.params.validate();

    if (!initial.has("r")) throw ConfigError("[initial] r is required");
    cfg.r = initial.number("r");
    cfg.p_r = initial.number("p_r", 0.0);
    require_in_interval(cfg.space, cfg.r);
    if (initial.tree())
      for (const auto& [key, _] : *initial.tree())
        if (key != "r" && key != "p_r") cfg.mu[key] = initial.number(key);

    cfg.integrator.dt = integrator.number("dt", cfg.integrator.dt);
    cfg.integrator.t_end = integrator.number("t_end", cfg.integrator.t_end);
    cfg.integrator.sample_every = integrator.integer("sample_every", cfg.integrator.sample_every);
    if (!(cfg.integrator.dt > 0.0) || !(cfg.integrator.t_end > 0.0) ||
        cfg.integrator.sample_every < 1)
      throw ConfigError("[integrator] dt, t_end and sample_every must be positive");

    if (output.has("path")) cfg.output_path = output.text("path");
    if (output.has("format")) cfg.format = output.text("format");
    if (cfg.format != "csv" && cfg.format != "json")
      throw ConfigError("[output] format must be csv or json");
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return cfg;
}

}  // namespace twopoint::cli
