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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "twopoint/embedded_model.hpp"
#include "twopoint/errors.hpp"
#include "twopoint/mass_center.hpp"

namespace twopoint {
namespace {

using std::numbers::pi;

CenterQuery query(Family f, double m1, double m2, double rho, double R = 1.0) {
  return {make_space(f, 2, R), m1, m2, rho};
}

// Two particles at distance rho along the first coordinate direction.
std::vector<Particle> pair_at(const EmbeddedModel& m, double m1, double m2, double rho) {
  const Eigen::VectorXd x = m.base_point();
  Eigen::VectorXd v = Eigen::VectorXd::Zero(m.ambient_dim());
  v(1) = rho;
  return {{x, m1}, {m.exp(x, v), m2}};
}

TEST(CenterR1, Ratio) {
  EXPECT_NEAR(center_r1(query(Family::Sphere, 2, 1, 0.9)), 0.3, 1e-15);
  EXPECT_EQ(center_r1(query(Family::ComplexProjective, 1.5, 1.5, 0.8)), 0.4);
}

TEST(CenterR2, Examples) {
  const auto s = center_r2(query(Family::Sphere, 2, 1, pi / 2));
  EXPECT_NEAR(s.rho1, std::atan(0.5), 1e-12);
  EXPECT_NEAR(s.rho1 + s.rho2, pi / 2, 1e-15);
  EXPECT_NEAR(s.effective_mass, 2 * std::cos(s.rho1) + std::cos(s.rho2), 1e-14);
  const auto h = center_r2(query(Family::RealHyperbolic, 2, 1, 1.0));
  EXPECT_NEAR(h.rho1, 0.344724954936900004, 1e-12);
  EXPECT_NEAR(h.effective_mass, 2 * std::cosh(h.rho1) + std::cosh(h.rho2), 1e-13);
  EXPECT_DOUBLE_EQ(center_r2(query(Family::RealHyperbolic, 3, 3, 1.7)).rho1, 0.85);
}

TEST(CenterR2, AntipodalAndUnsupported) {
  EXPECT_THROW(center_r2(query(Family::Sphere, 1, 1, pi)), DegenerateCenter);
  const auto a = center_r2(query(Family::Sphere, 1, 2, pi));
  EXPECT_NEAR(a.rho1, pi, 1e-15);
  EXPECT_THROW(center_r2(query(Family::ComplexProjective, 1, 2, 0.5)), InvalidArgument);
}

TEST(CenterR3, Examples) {
  const double r = center_r3(query(Family::RealHyperbolic, 1, 2, 1.0));
  EXPECT_NEAR(r, 0.629769727364407242, 1e-12);
  EXPECT_GT(r, 0.5);
  EXPECT_DOUBLE_EQ(center_r3(query(Family::ComplexHyperbolic, 2, 2, 0.6)), 0.3);
  EXPECT_THROW(center_r3(query(Family::Sphere, 1, 2, 1.8)), NoBracket);
}

TEST(Centers, MonotoneInMassRatio) {
  for (Family f : {Family::Sphere, Family::RealHyperbolic}) {
    double prev2 = 2.0, prev3 = 2.0;
    for (double m1 : {0.5, 0.8, 1.0, 1.5, 3.0}) {
      const auto q = query(f, m1, 1.0, 1.2);
      const double r2 = center_r2(q).rho1, r3 = center_r3(q);
      EXPECT_LT(r2, prev2);
      EXPECT_LT(r3, prev3);
      prev2 = r2;
      prev3 = r3;
    }
  }
}

TEST(Upsilon, Properties) {
  const EmbeddedModel h(true, 2, 1.0);
  const auto space = make_space(Family::RealHyperbolic, 2, 1.0);
  const auto ps = pair_at(h, 1.0, 1.0, 1.4);
  EXPECT_EQ(upsilon(space, {ps[0]}, ps[0].point), 0.0);
  const auto mid = h.geodesic_point(ps[0].point, ps[1].point, 0.7);
  EXPECT_LT(upsilon(space, ps, mid), upsilon(space, ps, ps[0].point));
  EXPECT_LT(upsilon(space, ps, mid), upsilon(space, ps, ps[1].point));
  const auto probe = h.geodesic_point(ps[0].point, ps[1].point, 0.3);
  const auto mirror = h.geodesic_point(ps[0].point, ps[1].point, 1.1);
  EXPECT_NEAR(upsilon(space, ps, probe), upsilon(space, {ps[1], ps[0]}, mirror), 1e-13);
}

TEST(UpsilonMinimize, MatchesR3) {
  for (Family f : {Family::RealHyperbolic, Family::Sphere}) {
    const auto space = make_space(f, 2, 1.0);
    const auto m = embedded_model(space);
    const auto ps = pair_at(m, 1.0, 2.0, 1.0);
    const auto best = upsilon_minimize(space, ps);
    EXPECT_NEAR(best.arclength, center_r3({space, 1.0, 2.0, 1.0}), 1e-8) << family_name(f);
    // Positive second difference along the connecting geodesic.
    const double h = 1e-3, t = best.arclength;
    const auto at = [&](double s) {
      return upsilon(space, ps, m.geodesic_point(ps[0].point, ps[1].point, s));
    };
    EXPECT_GT(at(t + h) - 2 * at(t) + at(t - h), 0.0);
  }
}

TEST(UpsilonMinimize, TrivialCases) {
  const auto space = make_space(Family::RealHyperbolic, 3, 2.0);
  const auto m = embedded_model(space);
  const auto ps = pair_at(m, 1.0, 1.0, 1.0);
  EXPECT_NEAR(upsilon_minimize(space, ps).arclength, 0.5, 1e-10);
  const auto one = upsilon_minimize(space, {ps[1]});
  EXPECT_LT(m.distance(one.point, ps[1].point), 1e-9);
}

TEST(UpsilonMinimize, ThreeParticles) {
  const auto space = make_space(Family::RealHyperbolic, 2, 1.0);
  const auto m = embedded_model(space);
  const Eigen::VectorXd x = m.base_point();
  std::vector<Particle> ps;
  for (int k = 0; k < 3; ++k) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(3);
    v(1) = 0.8 * std::cos(2 * pi * k / 3);
    v(2) = 0.8 * std::sin(2 * pi * k / 3);
    ps.push_back({m.exp(x, v), 1.0});
  }
  const auto best = upsilon_minimize(space, ps);
  EXPECT_LT(m.distance(best.point, x), 1e-8);
  EXPECT_LT(best.grad_norm, 1e-9);
}

TEST(UpsilonMinimize, UnequalMassesConverge) {
  for (Family f : {Family::RealHyperbolic, Family::Sphere}) {
    const auto space = make_space(f, 2, 1.0);
    const auto m = embedded_model(space);
    std::vector<Particle> ps;
    for (int k = 0; k < 5; ++k) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(3);
      v(1) = 0.6 * std::cos(k);
      v(2) = 0.6 * std::sin(k);
      ps.push_back({m.exp(m.base_point(), v), 1.0 + k});
    }
    const auto best = upsilon_minimize(space, ps);
    EXPECT_LT(best.grad_norm, 1e-9) << family_name(f);
    const double f0 = upsilon(space, ps, best.point);
    for (int k = 0; k < 8; ++k) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(3);
      v(1) = 1e-3 * std::cos(k);
      v(2) = 1e-3 * std::sin(k);
      EXPECT_GT(upsilon(space, ps, m.exp(best.point, m.project_tangent(best.point, v))), f0);
    }
  }
}

TEST(AlphaForCenter, Roots) {
  for (Family f : {Family::ComplexProjective, Family::RealHyperbolic, Family::QuaternionHyperbolic}) {
    const auto space = make_space(f, 2, 1.0);
    const TwoBodyParams p{1.0, 2.5, 0.5, Potential::free()};
    EXPECT_NEAR(alpha_for_center(space, {3.0, 1.0, 0.5, Potential::free()}, 0.4, CenterKind::R1), 0.25, 1e-15);
    EXPECT_NEAR(alpha_for_center(space, {1.5, 1.5, 0.5, Potential::free()}, 0.4, CenterKind::R3_2lambda), 0.5, 1e-12);
    for (double r : {0.2, 0.5, 0.8}) {
      TwoBodyParams q = p;
      q.alpha = alpha_for_center(space, p, r, CenterKind::R3_2lambda);
      EXPECT_LT(std::abs(inverse_coeffs(space, q, r).B), 1e-10);
      // s1 = alpha p is the R3 center on the curvature-R^-2 submanifold.
      const double dist = distance_from_r(space, r);
      const auto sub = make_space(space.compact ? Family::Sphere : Family::RealHyperbolic, 2, 1.0);
      EXPECT_NEAR(q.alpha * dist, center_r3({sub, p.m1, p.m2, dist}), 1e-10);
      q.alpha = alpha_for_center(space, p, r, CenterKind::R3_lambda);
      EXPECT_LT(std::abs(inverse_coeffs(space, q, r).E), 1e-10);
    }
  }
}

TEST(FlatLimit, SecondOrder) {
  for (Family f : {Family::Sphere, Family::RealHyperbolic}) {
    for (FlatCenter c : {FlatCenter::R2, FlatCenter::R3}) {
      const auto rep = flat_limit(f, c, 1.0, 2.0, 1.0, {10.0, 100.0, 1000.0});
      ASSERT_EQ(rep.orders.size(), 2u);
      for (double o : rep.orders) EXPECT_NEAR(o, 2.0, 0.05);
      EXPECT_NEAR(rep.extrapolated, rep.ratio_point, 1e-9);
    }
  }
}

}  // namespace
}  // namespace twopoint
