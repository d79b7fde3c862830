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

#include "twopoint/geodesic_products.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "twopoint/embedded_model.hpp"
#include "twopoint/errors.hpp"

namespace twopoint {

Eigen::MatrixXd closed_form_products(const SpaceSpec& space, double s) {
  const int q1 = space.q1, q2 = space.q2;
  const int m = 1 + 2 * q1 + 2 * q2;
  const double R = space.R, h = 0.5 * R * R;
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(m, m);
  g(0, 0) = R * R;

  auto fill = [&](int x, int y, double arg) {
    double xx, xy, yy;
    if (space.compact) {
      xx = h * (1.0 + std::cos(arg));
      xy = -h * std::sin(arg);
      yy = h * (1.0 - std::cos(arg));
    } else {
      xx = h * (1.0 + std::cosh(arg));
      xy = -h * std::sinh(arg);
      yy = h * (std::cosh(arg) - 1.0);
    }
    g(x, x) = xx;
    g(y, y) = yy;
    g(x, y) = g(y, x) = xy;
  };
  for (int i = 0; i < q1; ++i) fill(1 + i, 1 + q1 + i, s / R);
  for (int j = 0; j < q2; ++j) {
    fill(1 + 2 * q1 + j, 1 + 2 * q1 + q2 + j, 2.0 * s / R);
  }
  return g;
}

std::vector<GeodesicProductSample> killing_products_along_geodesic(
    const AdaptedBasis& basis, std::span<const double> s_grid) {
  const EmbeddedModel model = embedded_model(basis.space);
  const double R = basis.space.R;
  const int m = basis.m_dim();
  const Eigen::MatrixXd lam = basis.elements[0].real();

  std::vector<Eigen::MatrixXd> fields;
  for (int a = 0; a < m; ++a) fields.push_back(basis.elements[a].real());

  std::vector<GeodesicProductSample> out;
  for (double s : s_grid) {
    const Eigen::MatrixXd flow = (lam * (s / R)).exp();
    const Eigen::VectorXd x = flow * model.base_point();
    Eigen::MatrixXd v(x.size(), m);
    for (int a = 0; a < m; ++a) v.col(a) = fields[a] * x;
    GeodesicProductSample sample;
    sample.s = s;
    sample.embedded = v.transpose() * model.metric() * v;
    sample.closed = closed_form_products(basis.space, s);
    out.push_back(std::move(sample));
  }
  return out;
}

}  // namespace twopoint
