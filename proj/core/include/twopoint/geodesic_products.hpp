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

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "twopoint/lie_algebra.hpp"

namespace twopoint {

// Pointwise products g(V_a, V_b) of the Killing fields of the m-part of
// the adapted basis at arclength s along the reference geodesic, from the
// closed forms. Depends only on (compact, q1, q2, R).
Eigen::MatrixXd closed_form_products(const SpaceSpec& space, double s);

struct GeodesicProductSample {
  double s = 0.0;
  Eigen::MatrixXd embedded;
  Eigen::MatrixXd closed;

  double residual() const { return (embedded - closed).cwiseAbs().maxCoeff(); }
};

// Embedded-model evaluation at x(s) = exp(s Lambda / R) x0, paired with the
// closed forms. Sphere and RealHyperbolic only (UnsupportedModel otherwise).
std::vector<GeodesicProductSample> killing_products_along_geodesic(
    const AdaptedBasis& basis, std::span<const double> s_grid);

}  // namespace twopoint
