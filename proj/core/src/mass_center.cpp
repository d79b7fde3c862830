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

#include "twopoint/mass_center.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "twopoint/embedded_model.hpp"
#include "twopoint/errors.hpp"
#include "twopoint/roots.hpp"

namespace twopoint {
namespace {

// sin/cos or sinh/cosh by signature.
struct Trig {
  bool hyp;
  double S(double x) const { return hyp ? std::sinh(x) : std::sin(x); }
  double C(double x) const { return hyp ? std::cosh(x) : std::cos(x); }
};

void check_query(const CenterQuery& q, bool closed_upper) {
  if (!(q.m1 > 0.0) || !(q.m2 > 0.0)) throw InvalidArgument("masses must be positive");
  if (!(q.rho > 0.0) || !std::isfinite(q.rho)) {
    throw InvalidArgument("rho must be positive");
  }
  const double diam = q.space.diameter();
  if (closed_upper ? q.rho > diam : q.rho >= diam) {
    throw InvalidArgument("rho exceeds the diameter of the space");
  }
}

bool constant_curvature(Family f) {
  return f == Family::Sphere || f == Family::RealProjective ||
         f == Family::RealHyperbolic;
}

// Root of m1 S(k rho1 / R) = m2 S(k (rho - rho1) / R) on (0, rho).
double solve_split(const CenterQuery& q, double k) {
  const Trig t{!q.space.compact};
  const double R = q.space.R;
  const ValueAndSlope f = [&](double x) {
    const double a = k * x / R, b = k * (q.rho - x) / R;
    return std::pair{q.m1 * t.S(a) - q.m2 * t.S(b),
                     k / R * (q.m1 * t.C(a) + q.m2 * t.C(b))};
  };
  return newton_bisect(f, 0.0, q.rho, 1e-15);
}

}  // namespace

double center_r1(const CenterQuery& q) {
  check_query(q, false);
  if (q.m1 == q.m2) return 0.5 * q.rho;
  return q.rho * q.m2 / (q.m1 + q.m2);
}

R2Center center_r2(const CenterQuery& q) {
  if (!constant_curvature(q.space.family)) {
    throw InvalidArgument("the R2 center is defined on constant curvature spaces");
  }
  check_query(q, true);
  const Trig t{!q.space.compact};
  const double R = q.space.R;
  R2Center out;
  if (q.space.compact && q.rho >= std::numbers::pi * R) {
    if (q.m1 == q.m2) {
      throw DegenerateCenter("antipodal equal masses: center undetermined, mass 0");
    }
    out.rho1 = q.m1 > q.m2 ? 0.0 : q.rho;
  } else if (q.m1 == q.m2) {
    out.rho1 = 0.5 * q.rho;
  } else {
    out.rho1 = solve_split(q, 1.0);
  }
  out.rho2 = q.rho - out.rho1;
  out.effective_mass = q.m1 * t.C(out.rho1 / R) + q.m2 * t.C(out.rho2 / R);
  return out;
}

double center_r3(const CenterQuery& q) {
  check_query(q, false);
  if (q.space.compact && q.rho >= 0.5 * std::numbers::pi * q.space.R) {
    throw NoBracket("compact R3 needs rho < pi R / 2");
  }
  if (q.m1 == q.m2) return 0.5 * q.rho;
  return solve_split(q, 2.0);
}

std::string_view center_kind_name(CenterKind kind) {
  switch (kind) {
    case CenterKind::R1: return "R1";
    case CenterKind::R3_2lambda: return "R3_2lambda";
    case CenterKind::R3_lambda: return "R3_lambda";
  }
  return "?";
}

double upsilon(const SpaceSpec& space, const std::vector<Particle>& particles,
               const Eigen::VectorXd& x) {
  const EmbeddedModel model = embedded_model(space);
  const Trig t{model.hyperbolic()};
  double s = 0.0;
  for (const auto& p : particles) {
    const double v = t.S(model.distance(x, p.point) / space.R);
    s += p.mass * v * v;
  }
  return s;
}

UpsilonMinimum upsilon_minimize(const SpaceSpec& space,
                                const std::vector<Particle>& particles) {
  const EmbeddedModel model = embedded_model(space);
  if (particles.empty()) throw InvalidArgument("no particles");
  const double R = space.R;
  const Trig t{model.hyperbolic()};
  if (!model.hyperbolic()) {
    for (std::size_t i = 0; i < particles.size(); ++i) {
      for (std::size_t j = i + 1; j < particles.size(); ++j) {
        if (model.distance(particles[i].point, particles[j].point) >=
            0.5 * std::numbers::pi * R) {
          throw InvalidArgument("pairwise distances must stay below pi R / 2");
        }
      }
    }
  }

  UpsilonMinimum out;
  out.arclength = std::numeric_limits<double>::quiet_NaN();
  if (particles.size() == 1) {
    out.point = particles[0].point;
    return out;
  }

  if (particles.size() == 2) {
    const auto& y1 = particles[0].point;
    const auto& y2 = particles[1].point;
    const double m1 = particles[0].mass, m2 = particles[1].mass;
    const double rho = model.distance(y1, y2);
    // Sign of Upsilon(a) - Upsilon(b) along the geodesic, using
    // S^2 x - S^2 y = S(x + y) S(x - y) so nearby values do not cancel.
    auto less = [&](double a, double b) {
      const double d = m1 * t.S((a + b) / R) * t.S((a - b) / R) +
                       m2 * t.S((2 * rho - a - b) / R) * t.S((b - a) / R);
      return d < 0.0;
    };
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0.0, hi = rho;
    double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    int it = 0;
    while (hi - lo > 1e-12 * std::max(1.0, rho) && it < 500) {
      if (less(x1, x2)) {
        hi = x2;
        x2 = x1;
        x1 = hi - g * (hi - lo);
      } else {
        lo = x1;
        x1 = x2;
        x2 = lo + g * (hi - lo);
      }
      ++it;
    }
    out.arclength = 0.5 * (lo + hi);
    out.point = model.geodesic_point(y1, y2, out.arclength);
    out.iterations = it;
    return out;
  }

  double total = 0.0;
  Eigen::VectorXd x = Eigen::VectorXd::Zero(model.ambient_dim());
  for (const auto& p : particles) {
    x += p.mass * p.point;
    total += p.mass;
  }
  if (model.hyperbolic()) {
    x *= R / std::sqrt(-model.inner(x, x));
  } else {
    x = model.normalize(x);
  }

  auto gradient = [&](const Eigen::VectorXd& at) {
    Eigen::VectorXd g = Eigen::VectorXd::Zero(at.size());
    for (const auto& p : particles) {
      const double d = model.distance(at, p.point);
      if (d == 0.0) continue;
      const Eigen::VectorXd u = model.log(at, p.point) / d;
      g -= p.mass * t.S(2.0 * d / R) / R * u;
    }
    return model.project_tangent(at, g);
  };
  auto norm = [&](const Eigen::VectorXd& v) {
    return std::sqrt(std::max(0.0, model.inner(v, v)));
  };

  // Orthonormal frame of the tangent space at x (the model metric is
  // positive definite there in both signatures).
  const int dim = model.ambient_dim() - 1;
  auto frame = [&](const Eigen::VectorXd& at) {
    std::vector<Eigen::VectorXd> b;
    for (int k = 0; k < model.ambient_dim() && static_cast<int>(b.size()) < dim; ++k) {
      Eigen::VectorXd v = model.project_tangent(at, Eigen::VectorXd::Unit(at.size(), k));
      for (const auto& e : b) v -= model.inner(v, e) * e;
      const double n = norm(v);
      if (n > 1e-6) b.push_back(v / n);
    }
    return b;
  };

  // Riemannian Hessian of sum m S^2(d / R): 2 m C(2d/R) / R^2 along the
  // geodesic to each particle and 2 m C^2(d/R) / R^2 across it.
  auto hessian = [&](const Eigen::VectorXd& at, const std::vector<Eigen::VectorXd>& b) {
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (const auto& p : particles) {
      const double d = model.distance(at, p.point);
      const double cd = t.C(d / R);
      const double across = 2.0 * p.mass * cd * cd / (R * R);
      h += across * Eigen::MatrixXd::Identity(dim, dim);
      if (d == 0.0) continue;
      const Eigen::VectorXd u = model.log(at, p.point) / d;
      Eigen::VectorXd uc(dim);
      for (int i = 0; i < dim; ++i) uc(i) = model.inner(u, b[i]);
      h += (2.0 * p.mass * t.C(2.0 * d / R) / (R * R) - across) * uc * uc.transpose();
    }
    return h;
  };

  double step = R * R / total;
  for (int it = 0; it < 100000; ++it) {
    const Eigen::VectorXd g = gradient(x);
    const double gn = norm(g);
    out.iterations = it;
    out.grad_norm = gn;
    if (gn < 1e-9) {
      out.point = x;
      return out;
    }

    const auto b = frame(x);
    Eigen::VectorXd gc(dim);
    for (int i = 0; i < dim; ++i) gc(i) = model.inner(g, b[i]);
    const Eigen::LLT<Eigen::MatrixXd> llt(hessian(x, b));
    if (llt.info() == Eigen::Success) {
      const Eigen::VectorXd dc = llt.solve(-gc);
      Eigen::VectorXd dir = Eigen::VectorXd::Zero(x.size());
      for (int i = 0; i < dim; ++i) dir += dc(i) * b[i];
      bool moved = false;
      for (double lam = 1.0; lam > 1e-12; lam *= 0.5) {
        const Eigen::VectorXd trial = model.exp(x, lam * dir);
        if (norm(gradient(trial)) < gn) {
          x = trial;
          moved = true;
          break;
        }
      }
      if (moved) continue;
    }

    // Gradient step with Armijo backtracking.
    const double f0 = upsilon(space, particles, x);
    step *= 2.0;
    Eigen::VectorXd trial;
    for (int k = 0; k < 60; ++k) {
      trial = model.exp(x, -step * g);
      if (upsilon(space, particles, trial) <= f0 - 1e-4 * step * gn * gn) break;
      step *= 0.5;
    }
    x = trial;
  }
  throw NonConvergence("upsilon descent hit the iteration cap");
}

double alpha_for_center(const SpaceSpec& space, const TwoBodyParams& params,
                        double r, CenterKind kind) {
  params.validate();
  require_in_interval(space, r);
  const double m1 = params.m1, m2 = params.m2;
  const double a1 = m2 / (m1 + m2);
  if (kind == CenterKind::R1) return a1;

  const Trig t{!space.compact};
  const double th = space.compact ? std::atan(r) : std::atanh(r);
  const double k = kind == CenterKind::R3_2lambda ? 4.0 : 2.0;
  const ValueAndSlope f = [&](double a) {
    return std::pair{m1 * t.S(k * a * th) - m2 * t.S(k * (1.0 - a) * th),
                     k * th * (m1 * t.C(k * a * th) + m2 * t.C(k * (1.0 - a) * th))};
  };

  constexpr int kCells = 256;
  std::vector<double> roots;
  double xa = 0.0, fa = f(0.0).first;
  for (int i = 1; i <= kCells; ++i) {
    const double xb = static_cast<double>(i) / kCells;
    const double fb = f(xb).first;
    if (fa == 0.0 && xa > 0.0) roots.push_back(xa);
    if ((fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0)) {
      roots.push_back(newton_bisect(f, xa, xb, 1e-15));
    }
    xa = xb;
    fa = fb;
  }
  if (roots.empty()) {
    throw NoBracket("no sign change of the " + std::string(center_kind_name(kind)) +
                    " equation on alpha in [0, 1]");
  }
  return *std::min_element(roots.begin(), roots.end(), [&](double x, double y) {
    return std::abs(x - a1) < std::abs(y - a1);
  });
}

FlatLimitReport flat_limit(Family family, FlatCenter center, double m1,
                           double m2, double rho,
                           const std::vector<double>& radii) {
  FlatLimitReport rep;
  rep.radii = radii;
  rep.ratio_point = rho * m2 / (m1 + m2);
  std::vector<double> vals;
  for (double R : radii) {
    CenterQuery q{make_space(family, 2, R), m1, m2, rho};
    const double v = center == FlatCenter::R2 ? center_r2(q).rho1 : center_r3(q);
    vals.push_back(v);
    rep.errors.push_back(v - rep.ratio_point);
  }
  for (std::size_t i = 1; i < radii.size(); ++i) {
    rep.orders.push_back(std::log(std::abs(rep.errors[i - 1] / rep.errors[i])) /
                         std::log(radii[i] / radii[i - 1]));
  }
  if (radii.size() >= 2) {
    const std::size_t n = radii.size();
    const double a = radii[n - 2] * radii[n - 2], b = radii[n - 1] * radii[n - 1];
    rep.extrapolated = (b * vals[n - 1] - a * vals[n - 2]) / (b - a);
  }
  return rep;
}

}  // namespace twopoint
