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

#include <gtest/gtest.h>

#include "twopoint/errors.hpp"
#include "twopoint/potential.hpp"

namespace twopoint {
namespace {

TEST(Potential, Closed) {
  const auto s = make_space(Family::Sphere, 2, 1.5);
  const auto h = make_space(Family::RealHyperbolic, 2, 1.5);
  for (double r : {0.2, 0.6}) {
    const double ps = distance_from_r(s, r), ph = distance_from_r(h, r);
    EXPECT_NEAR(Potential::cotangent(0.3).value(s, r), -0.3 / std::tan(ps / 1.5), 1e-14);
    EXPECT_NEAR(Potential::cotangent(0.3).value(h, r), -0.3 / std::tanh(ph / 1.5), 1e-14);
    EXPECT_NEAR(Potential::harmonic(2.0).value(s, r), std::pow(std::tan(ps / 3.0), 2), 1e-14);
    EXPECT_NEAR(Potential::harmonic(2.0).value(h, r), std::pow(std::tanh(ph / 3.0), 2), 1e-14);
  }
  EXPECT_EQ(Potential().value(s, 0.4), 0.0);
  EXPECT_EQ(Potential().kind(), Potential::Kind::Free);
}

TEST(Potential, Tabulated) {
  const auto s = make_space(Family::Sphere, 2, 1.0);
  std::vector<double> p, u;
  for (int i = 0; i <= 20; ++i) {
    p.push_back(0.1 + 0.1 * i);
    u.push_back(std::cos(p.back()));
  }
  const auto pot = Potential::tabulated(p, u);
  const double r = r_from_distance(s, 1.05);
  EXPECT_NEAR(pot.value(s, r), std::cos(1.05), 1e-3);
  const double h = 1e-6;
  const double fd = (pot.value(s, r + h) - pot.value(s, r - h)) / (2 * h);
  EXPECT_NEAR(pot.derivative(s, r), fd, 1e-6);
  EXPECT_THROW(pot.value(s, r_from_distance(s, 2.5)), InvalidArgument);
  EXPECT_THROW(Potential::tabulated({0.1, 0.2, 0.3}, {1, 2, 3}), InvalidArgument);
  EXPECT_THROW(Potential::tabulated({0.1, 0.3, 0.2, 0.4}, {1, 2, 3, 4}), InvalidArgument);
}

}  // namespace
}  // namespace twopoint
