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

#include "cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cli/config.hpp"
#include "cli/reference_states.hpp"
#include "twopoint/embedded_model.hpp"
#include "twopoint/geodesic_products.hpp"
#include "twopoint/mass_center.hpp"

namespace twopoint::cli {
namespace {

std::string label(const SpaceSpec& s) {
  return std::string(family_name(s.family)) + "(" + std::to_string(s.n) + ")";
}

double rel(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

void algebra(std::vector<VerifyRow>& rows, const VerifyOptions& opt) {
  const std::pair<Family, int> cases[] = {
      {Family::Sphere, 2},         {Family::Sphere, 3},
      {Family::Sphere, 4},         {Family::RealProjective, 3},
      {Family::RealHyperbolic, 2}, {Family::RealHyperbolic, 3},
      {Family::ComplexProjective, 2}, {Family::ComplexProjective, 3},
      {Family::ComplexHyperbolic, 2}, {Family::ComplexHyperbolic, 3},
  };
  bool first = true;
  for (const auto& [f, n] : cases) {
    AdaptedBasis b = build_adapted_basis(make_space(f, n, 1.0));
    if (opt.inject_fault && first) b.structure(b.L(), b.e_lambda(0), b.f_lambda(0)) += 1e-3;
    first = false;
    for (const auto& c : verify_adapted_relations(b).checks)
      rows.push_back({"algebra", label(b.space) + " " + c.name, c.residual, c.tolerance});
  }
  for (const auto& [f, n] : {std::pair{Family::Sphere, 2}, std::pair{Family::Sphere, 3},
                             std::pair{Family::RealHyperbolic, 2},
                             std::pair{Family::RealHyperbolic, 3}}) {
    const auto b = build_adapted_basis(make_space(f, n, 1.0));
    const double hi = b.space.compact ? 0.999 * b.space.diameter() : 3.0;
    std::vector<double> grid;
    for (int i = 0; i < 50; ++i) grid.push_back(hi * i / 49.0);
    double worst = 0.0;
    for (const auto& row : killing_products_along_geodesic(b, grid))
      worst = std::max(worst, row.residual());
    rows.push_back({"algebra", label(b.space) + " geodesic_products", worst, 1e-10});
  }
}

void coeffs(std::vector<VerifyRow>& rows) {
  std::mt19937_64 rng(20261014);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double det = 0.0, inv = 0.0, cont = 0.0, imag = 0.0, symbol = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Family f = all_families()[i % all_families().size()];
    const int n = std::min(max_dimension(f), 2 + static_cast<int>(3 * u(rng)));
    const auto s = make_space(f, n, 0.5 + 2.0 * u(rng));
    TwoBodyParams p{0.2 + 3.0 * u(rng), 0.2 + 3.0 * u(rng), 0.05 + 0.9 * u(rng),
                    Potential::free()};
    const double r = 0.05 + (s.r_interval.bounded() ? 0.9 : 4.0) * u(rng);

    const Eigen::MatrixXd g = assemble_gamma(s, gamma_blocks(s, p, r));
    det = std::max(det, rel(gamma_det_closed(s, p, r), g.partialPivLu().determinant()));
    const Eigen::MatrixXd gi = g.inverse();
    const auto c = inverse_coeffs(s, p, r);
    // Pairs are interleaved: (r, L), then (X, Y) per root direction.
    const int l = 2, l2 = 2 + 2 * s.q1;
    const double got[] = {c.g00, c.g01, c.g11, c.D, c.E, c.F, c.C, c.B, c.A};
    // Constant curvature spaces have no lambda pairs.
    const bool present[] = {true, s.q1 > 0, s.q2 > 0};
    const auto at = [&](int block, int i, int j) { return present[block] ? gi(i, j) : 0.0; };
    const double want[] = {gi(0, 0),         gi(0, 1),             gi(1, 1),
                           at(1, l, l),      at(1, l, l + 1),      at(1, l + 1, l + 1),
                           at(2, l2, l2),    at(2, l2, l2 + 1),    at(2, l2 + 1, l2 + 1)};
    for (int k = 0; k < 9; ++k) {
      const int block = k / 3;
      if (!present[block]) continue;
      const double scale = std::max(std::abs(want[3 * block]), std::abs(want[3 * block + 2]));
      inv = std::max(inv, std::abs(got[k] - want[k]) / scale);
    }
    symbol = std::max(symbol, rel(radial_operator(s, p, r).A2, -0.5 * c.g00));

    if (s.compact) {
      const double rh = std::min(r, 0.95);
      const auto img = continuation_image(s, p, rh);
      const auto h = inverse_coeffs(make_space(dual_family(f), n, s.R), p, rh);
      const double scale = std::max({std::abs(h.g00), std::abs(h.D), std::abs(h.F),
                                     std::abs(h.C), std::abs(h.A)});
      const double a[] = {img.real.g00, img.real.g01, img.real.g11, img.real.D, img.real.E,
                          img.real.F, img.real.C, img.real.B, img.real.A};
      const double b[] = {h.g00, h.g01, h.g11, h.D, h.E, h.F, h.C, h.B, h.A};
      for (int k = 0; k < 9; ++k) cont = std::max(cont, std::abs(a[k] - b[k]) / scale);
      imag = std::max(imag, img.max_imag() / scale);
    }
  }
  rows.push_back({"coeffs", "det_gamma closed vs numeric", det, 1e-10});
  rows.push_back({"coeffs", "inverse blocks closed vs numeric", inv, 1e-10});
  rows.push_back({"coeffs", "continuation real part", cont, 1e-10});
  rows.push_back({"coeffs", "continuation imaginary residue", imag, 1e-12});
  rows.push_back({"coeffs", "A2 = -g00/2", symbol, 1e-12});
}

void dynamics(std::vector<VerifyRow>& rows) {
  for (const auto& ref : reference_states()) {
    const auto sys = reference_system(ref);
    const auto s0 = reference_initial(sys, ref);
    IntegratorOptions o;
    const auto coarse = integrate(sys, s0, o);
    o.dt *= 0.5;
    const auto fine = integrate(sys, s0, o);
    const std::string tag = label(sys.space());
    rows.push_back({"dynamics", tag + " energy drift", coarse.energy_drift(), 1e-8});
    rows.push_back({"dynamics", tag + " casimir drift", coarse.casimir_drift(), 1e-8});
    rows.push_back({"dynamics", tag + " |energy drift ratio - 16|",
                    std::abs(coarse.energy_drift() / fine.energy_drift() - 16.0), 4.0});
    rows.push_back({"dynamics", tag + " |casimir drift ratio - 16|",
                    std::abs(coarse.casimir_drift() / fine.casimir_drift() - 16.0), 4.0});

    TwoBodyParams geo{ref.m1, ref.m2, ref.m2 / (ref.m1 + ref.m2), Potential::free()};
    const ReducedSystem gs(sys.basis(), geo);
    PhaseState g0 = gs.make_state(0.3, 0.05);
    g0.mu(0) = 0.8;
    rows.push_back({"dynamics", tag + " geodesic regime residual",
                    integrate(gs, g0, IntegratorOptions{}).max_geodesic_residual(), 1e-12});
  }
}

void masscenter(std::vector<VerifyRow>& rows) {
  using std::numbers::pi;
  const auto s2 = make_space(Family::Sphere, 2, 1.0);
  const auto h2 = make_space(Family::RealHyperbolic, 2, 1.0);
  rows.push_back({"masscenter", "R2 sphere closed form",
                  std::abs(center_r2({s2, 2.0, 1.0, pi / 2}).rho1 - std::atan(0.5)), 1e-10});

  const auto model = embedded_model(h2);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(3);
  v(1) = 1.0;
  const std::vector<Particle> pair{{model.base_point(), 1.0},
                                   {model.exp(model.base_point(), v), 2.0}};
  rows.push_back({"masscenter", "upsilon minimizer vs R3",
                  std::abs(upsilon_minimize(h2, pair).arclength - center_r3({h2, 1.0, 2.0, 1.0})),
                  1e-8});

  double b = 0.0, e = 0.0;
  for (Family f : {Family::ComplexProjective, Family::RealHyperbolic, Family::CayleyProjective}) {
    const auto s = make_space(f, 2, 1.0);
    for (double r : {0.2, 0.5, 0.8}) {
      TwoBodyParams p{1.0, 2.5, 0.5, Potential::free()};
      p.alpha = alpha_for_center(s, p, r, CenterKind::R3_2lambda);
      b = std::max(b, std::abs(inverse_coeffs(s, p, r).B));
      p.alpha = alpha_for_center(s, p, r, CenterKind::R3_lambda);
      e = std::max(e, std::abs(inverse_coeffs(s, p, r).E));
    }
  }
  rows.push_back({"masscenter", "B at R3_2lambda alpha", b, 1e-10});
  rows.push_back({"masscenter", "E at R3_lambda alpha", e, 1e-10});

  double order = 0.0;
  for (Family f : {Family::Sphere, Family::RealHyperbolic})
    for (FlatCenter c : {FlatCenter::R2, FlatCenter::R3})
      for (double o : flat_limit(f, c, 1.0, 2.0, 1.0, {10.0, 100.0, 1000.0}).orders)
        order = std::max(order, std::abs(o - 2.0));
  rows.push_back({"masscenter", "|flat limit order - 2|", order, 0.05});
}

}  // namespace

std::vector<VerifyRow> run_verify(const std::string& scope, const VerifyOptions& options) {
  const bool all = scope == "all";
  if (!all && scope != "algebra" && scope != "coeffs" && scope != "dynamics" &&
      scope != "masscenter")
    throw ConfigError("unknown scope '" + scope + "'");
  std::vector<VerifyRow> rows;
  if (all || scope == "algebra") algebra(rows, options);
  if (all || scope == "coeffs") coeffs(rows);
  if (all || scope == "dynamics") dynamics(rows);
  if (all || scope == "masscenter") masscenter(rows);
  return rows;
}

}  // namespace twopoint::cli
