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

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace twopoint {

// The two-point homogeneous spaces other than Euclidean space.
enum class Family {
  Sphere,
  RealProjective,
  ComplexProjective,
  QuaternionProjective,
  CayleyProjective,
  RealHyperbolic,
  ComplexHyperbolic,
  QuaternionHyperbolic,
  CayleyHyperbolic,
};

// Open interval (lower, upper); upper may be +inf.
struct Interval {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();

  bool contains(double x) const { return x > lower && x < upper; }
  bool bounded() const { return upper < std::numeric_limits<double>::infinity(); }
};

struct Multiplicities {
  int q1 = 0;
  int q2 = 0;
};

/// A concrete rank-one symmetric space: family, dimension over the base
/// field, curvature radius and the data every radial formula depends on.
///
/// Immutable once built by make_space(); the radial coordinate r lives in
/// r_interval and maps to the geodesic distance between the particles via
/// distance_from_r().
struct SpaceSpec {
  Family family = Family::Sphere;
  int n = 2;
  double R = 1.0;
  int q1 = 0;
  int q2 = 1;
  bool compact = true;
  Interval r_interval;

  // Real dimension, 1 + q1 + q2.
  int real_dimension() const { return 1 + q1 + q2; }
  // Largest distance between two points (inf for noncompact families).
  double diameter() const;
};

std::span<const Family> all_families();

std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

bool is_compact(Family family);
// Sphere <-> RealHyperbolic, ComplexProjective <-> ComplexHyperbolic, ...
// RealProjective maps to RealHyperbolic.
Family dual_family(Family family);

Multiplicities multiplicities(Family family, int n);

// Smallest and largest admissible n (Cayley families admit only n = 2).
int min_dimension(Family family);
int max_dimension(Family family);

SpaceSpec make_space(Family family, int n, double R);

/// Geodesic distance p between the particles for radial coordinate r:
/// p = 2R arctan r (compact), p = 2R artanh r (noncompact).
double distance_from_r(const SpaceSpec& space, double r);
double r_from_distance(const SpaceSpec& space, double p);
// dp/dr = 2R / (1 +- r^2).
double distance_derivative(const SpaceSpec& space, double r);

void require_in_interval(const SpaceSpec& space, double r);

}  // namespace twopoint
