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

#include <vector>

#include "twopoint/dynamics.hpp"

namespace twopoint::cli {

// Free two-body states with a close approach, so the RK4 error sits well
// above roundoff at dt = 1e-3 and still below 1e-8. The shipped configs
// carry the same numbers.
struct ReferenceState {
  Family family;
  double m1, m2, alpha;
  double r, p_r;
  std::vector<double> mu;
};

inline std::vector<ReferenceState> reference_states() {
  return {
      {Family::Sphere, 1.0, 2.0, 0.5, 0.2, -0.5, {0.5, 0.44, 0.38}},
      {Family::RealHyperbolic, 1.0, 2.0, 0.5, 0.85, -3.0, {0.02, 0.05, -0.04}},
      {Family::ComplexProjective, 1.0, 2.0, 0.5, 0.5, 0.1,
       {1.5, 1.32, 1.14, 0.33, 0.15, -0.03, -0.84, -1.02}},
  };
}

inline ReducedSystem reference_system(const ReferenceState& s) {
  return ReducedSystem(build_adapted_basis(make_space(s.family, 2, 1.0)),
                       TwoBodyParams{s.m1, s.m2, s.alpha, Potential::free()});
}

inline PhaseState reference_initial(const ReducedSystem& sys, const ReferenceState& s) {
  PhaseState p = sys.make_state(s.r, s.p_r);
  for (std::size_t i = 0; i < s.mu.size(); ++i) p.mu(static_cast<int>(i)) = s.mu[i];
  return p;
}

}  // namespace twopoint::cli
