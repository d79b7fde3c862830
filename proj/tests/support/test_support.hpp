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

#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "twopoint/radial_coefficients.hpp"
#include "twopoint/space_catalog.hpp"

namespace twopoint::testing {

inline double rel_err(double got, double want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

struct Draw {
  SpaceSpec space;
  TwoBodyParams params;
  double r = 0.5;
};

// Random (family, n, R, r, m1, m2, alpha). r stays a little inside the
// chart so the blocks are not near singular.
inline Draw random_draw(std::mt19937_64& rng, bool compact_only = false,
                        bool unit_interval = false) {
  std::uniform_int_distribution<int> fam(0, 8);
  std::uniform_int_distribution<int> dim(2, 4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Family f;
  do {
    f = all_families()[fam(rng)];
  } while (compact_only && !is_compact(f));
  const int n = (f == Family::CayleyProjective || f == Family::CayleyHyperbolic)
                    ? 2
                    : dim(rng);
  Draw d;
  d.space = make_space(f, n, 0.5 + 2.5 * u(rng));
  d.params.m1 = 0.2 + 3.0 * u(rng);
  d.params.m2 = 0.2 + 3.0 * u(rng);
  d.params.alpha = 0.05 + 0.9 * u(rng);
  const double hi = (d.space.r_interval.bounded() || unit_interval) ? 0.95 : 8.0;
  d.r = 0.05 + (hi - 0.05) * u(rng);
  return d;
}

}  // namespace twopoint::testing
