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

#include <cmath>
#include <functional>
#include <utility>

#include "twopoint/errors.hpp"

namespace twopoint {

// Value and derivative at x.
using ValueAndSlope = std::function<std::pair<double, double>(double)>;

/// Safeguarded Newton iteration on a sign-changing bracket [lo, hi]: a
/// Newton step is taken when it stays inside the bracket and shrinks the
/// residual, a bisection step otherwise.
inline double newton_bisect(const ValueAndSlope& f, double lo, double hi,
                            double tol = 1e-14, int max_iter = 200) {
  double flo = f(lo).first, fhi = f(hi).first;
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) throw NoBracket("root is not bracketed");
  // Orient so that f(lo) < 0.
  const bool flip = flo > 0.0;
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < max_iter; ++it) {
    auto [fx, dfx] = f(x);
    if (flip) {
      fx = -fx;
      dfx = -dfx;
    }
    if (fx == 0.0) return x;
    if (fx < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    double next = dfx != 0.0 ? x - fx / dfx : lo - 1.0;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) < tol || hi - lo < tol) return next;
    x = next;
  }
  throw NonConvergence("bracketed root search hit the iteration cap");
}

}  // namespace twopoint
