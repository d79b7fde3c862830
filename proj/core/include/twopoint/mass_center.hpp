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

#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "twopoint/radial_coefficients.hpp"
#include "twopoint/space_catalog.hpp"

namespace twopoint {

// Two particles at geodesic distance rho; rho1 is measured from particle 1.
struct CenterQuery {
  SpaceSpec space;
  double m1 = 1.0;
  double m2 = 1.0;
  double rho = 1.0;
};

// rho1 = rho m2 / (m1 + m2).
double center_r1(const CenterQuery& q);

struct R2Center {
  double rho1 = 0.0;
  double rho2 = 0.0;
  double effective_mass = 0.0;
};

// m1 sin(rho1/R) = m2 sin(rho2/R) (sinh on hyperbolic space). Constant
// curvature families only. Antipodal points on the sphere are admitted:
// unequal masses put the center on the heavier particle, equal masses
// throw DegenerateCenter.
R2Center center_r2(const CenterQuery& q);

// m1 sin(2 rho1/R) = m2 sin(2 rho2/R) (sinh on noncompact spaces). Compact
// spaces need rho < pi R / 2 and throw NoBracket beyond.
double center_r3(const CenterQuery& q);

struct Particle {
  Eigen::VectorXd point;
  double mass = 1.0;
};

// sum m_i sin^2(rho_i / R) (sinh^2 on hyperbolic space) on the embedded
// model of a Sphere or RealHyperbolic space.
double upsilon(const SpaceSpec& space, const std::vector<Particle>& particles,
               const Eigen::VectorXd& x);

struct UpsilonMinimum {
  Eigen::VectorXd point;
  // Arclength from the first particle (two-particle case; NaN otherwise).
  double arclength = 0.0;
  int iterations = 0;
  double grad_norm = 0.0;
};

UpsilonMinimum upsilon_minimize(const SpaceSpec& space,
                                const std::vector<Particle>& particles);

enum class CenterKind { R1, R3_2lambda, R3_lambda };

std::string_view center_kind_name(CenterKind kind);

// Split parameter alpha placing the reference point at the given center:
// R1 by the mass ratio, R3_2lambda where B vanishes, R3_lambda where E
// vanishes. When the compact equation has several roots in (0, 1) the one
// nearest the R1 value is returned.
double alpha_for_center(const SpaceSpec& space, const TwoBodyParams& params,
                        double r, CenterKind kind);

enum class FlatCenter { R2, R3 };

struct FlatLimitReport {
  std::vector<double> radii;
  std::vector<double> errors;  // rho1(R) - rho m2 / (m1 + m2)
  std::vector<double> orders;  // log10 of successive error ratios
  double extrapolated = 0.0;   // Richardson in R^-2 from the two largest R
  double ratio_point = 0.0;
};

// Evaluates the chosen center on `family` (constant curvature) for each
// radius. Radii must be increasing by a factor of 10.
FlatLimitReport flat_limit(Family family, FlatCenter center, double m1,
                           double m2, double rho,
                           const std::vector<double>& radii);

}  // namespace twopoint
