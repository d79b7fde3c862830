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

#include "twopoint/embedded_model.hpp"

#include <cmath>

#include "twopoint/errors.hpp"

namespace twopoint {

EmbeddedModel::EmbeddedModel(bool hyperbolic, int n, double R)
    : hyperbolic_(hyperbolic), n_(n), R_(R),
      J_(Eigen::MatrixXd::Identity(n + 1, n + 1)) {
  if (hyperbolic_) J_(0, 0) = -1.0;
}

double EmbeddedModel::inner(const Eigen::VectorXd& x,
                            const Eigen::VectorXd& y) const {
  double s = x.dot(y);
  if (hyperbolic_) s -= 2.0 * x(0) * y(0);
  return s;
}

Eigen::VectorXd EmbeddedModel::base_point() const {
  return R_ * Eigen::VectorXd::Unit(n_ + 1, 0);
}

double EmbeddedModel::distance(const Eigen::VectorXd& x,
                               const Eigen::VectorXd& y) const {
  const Eigen::VectorXd d = x - y;
  if (hyperbolic_) {
    const double chord = std::sqrt(std::max(0.0, inner(d, d)));
    return 2.0 * R_ * std::asinh(chord / (2.0 * R_));
  }
  return 2.0 * R_ * std::atan2(d.norm(), (x + y).norm());
}

Eigen::VectorXd EmbeddedModel::project_tangent(const Eigen::VectorXd& x,
                                               const Eigen::VectorXd& v) const {
  // <x,x> = +R^2 on the sphere and -R^2 on the hyperboloid.
  const double xx = hyperbolic_ ? -R_ * R_ : R_ * R_;
  return v - (inner(x, v) / xx) * x;
}

Eigen::VectorXd EmbeddedModel::exp(const Eigen::VectorXd& x,
                                   const Eigen::VectorXd& v) const {
  const double len = std::sqrt(std::max(0.0, inner(v, v)));
  if (len == 0.0) return x;
  const double a = len / R_;
  const Eigen::VectorXd u = v / len;
  if (hyperbolic_) return normalize(std::cosh(a) * x + R_ * std::sinh(a) * u);
  return normalize(std::cos(a) * x + R_ * std::sin(a) * u);
}

Eigen::VectorXd EmbeddedModel::log(const Eigen::VectorXd& x,
                                   const Eigen::VectorXd& y) const {
  const double d = distance(x, y);
  Eigen::VectorXd v = project_tangent(x, y);
  const double len = std::sqrt(std::max(0.0, inner(v, v)));
  if (len == 0.0 || d == 0.0) return Eigen::VectorXd::Zero(n_ + 1);
  return v * (d / len);
}

Eigen::VectorXd EmbeddedModel::geodesic_point(const Eigen::VectorXd& x,
                                              const Eigen::VectorXd& y,
                                              double t) const {
  const Eigen::VectorXd v = log(x, y);
  const double len = std::sqrt(std::max(0.0, inner(v, v)));
  if (len == 0.0) return x;
  return exp(x, v * (t / len));
}

Eigen::VectorXd EmbeddedModel::normalize(const Eigen::VectorXd& x) const {
  if (hyperbolic_) {
    // Keep the spatial part and recompute the time component.
    Eigen::VectorXd y = x;
    const double spatial = x.tail(n_).squaredNorm();
    y(0) = std::sqrt(R_ * R_ + spatial);
    return y;
  }
  return x * (R_ / x.norm());
}

EmbeddedModel embedded_model(const SpaceSpec& space) {
  if (space.family == Family::Sphere) {
    return EmbeddedModel(false, space.n, space.R);
  }
  if (space.family == Family::RealHyperbolic) {
    return EmbeddedModel(true, space.n, space.R);
  }
  throw UnsupportedModel("no embedded model for " +
                         std::string(family_name(space.family)));
}

}  // namespace twopoint
