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

#include <Eigen/Dense>

#include "twopoint/space_catalog.hpp"

namespace twopoint {

/// Sphere of radius R in Euclidean (n+1)-space, or the upper sheet of the
/// hyperboloid <x,x> = -R^2 in Minkowski (n+1)-space with signature
/// (-,+,...,+). The base point is R e_0 in both cases.
class EmbeddedModel {
 public:
  EmbeddedModel(bool hyperbolic, int n, double R);

  bool hyperbolic() const { return hyperbolic_; }
  int ambient_dim() const { return n_ + 1; }
  double radius() const { return R_; }

  double inner(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;
  const Eigen::MatrixXd& metric() const { return J_; }

  Eigen::VectorXd base_point() const;
  double distance(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

  Eigen::VectorXd project_tangent(const Eigen::VectorXd& x,
                                  const Eigen::VectorXd& v) const;
  Eigen::VectorXd exp(const Eigen::VectorXd& x, const Eigen::VectorXd& v) const;
  Eigen::VectorXd log(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;
  // Point at arclength t from x along the geodesic toward y.
  Eigen::VectorXd geodesic_point(const Eigen::VectorXd& x,
                                 const Eigen::VectorXd& y, double t) const;
  // Rescales an ambient vector back onto the model.
  Eigen::VectorXd normalize(const Eigen::VectorXd& x) const;

 private:
  bool hyperbolic_;
  int n_;
  double R_;
  Eigen::MatrixXd J_;
};

// Throws UnsupportedModel unless the family is Sphere or RealHyperbolic.
EmbeddedModel embedded_model(const SpaceSpec& space);

}  // namespace twopoint
