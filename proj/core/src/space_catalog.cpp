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

#include "twopoint/space_catalog.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "twopoint/errors.hpp"

namespace twopoint {
namespace {

constexpr std::array<Family, 9> kFamilies = {
    Family::Sphere,           Family::RealProjective,
    Family::ComplexProjective, Family::QuaternionProjective,
    Family::CayleyProjective, Family::RealHyperbolic,
    Family::ComplexHyperbolic, Family::QuaternionHyperbolic,
    Family::CayleyHyperbolic,
};

constexpr std::array<std::string_view, 9> kNames = {
    "sphere",            "real-projective",      "complex-projective",
    "quaternion-projective", "cayley-projective", "real-hyperbolic",
    "complex-hyperbolic", "quaternion-hyperbolic", "cayley-hyperbolic",
};

bool is_cayley(Family f) {
  return f == Family::CayleyProjective || f == Family::CayleyHyperbolic;
}

}  // namespace

std::span<const Family> all_families() { return kFamilies; }

std::string_view family_name(Family family) {
  return kNames[static_cast<std::size_t>(family)];
}

std::optional<Family> parse_family(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return kFamilies[i];
  }
  return std::nullopt;
}

bool is_compact(Family family) {
  switch (family) {
    case Family::Sphere:
    case Family::RealProjective:
    case Family::ComplexProjective:
    case Family::QuaternionProjective:
    case Family::CayleyProjective:
      return true;
    default:
      return false;
  }
}

Family dual_family(Family family) {
  switch (family) {
    case Family::Sphere:
    case Family::RealProjective:
      return Family::RealHyperbolic;
    case Family::ComplexProjective:
      return Family::ComplexHyperbolic;
    case Family::QuaternionProjective:
      return Family::QuaternionHyperbolic;
    case Family::CayleyProjective:
      return Family::CayleyHyperbolic;
    case Family::RealHyperbolic:
      return Family::Sphere;
    case Family::ComplexHyperbolic:
      return Family::ComplexProjective;
    case Family::QuaternionHyperbolic:
      return Family::QuaternionProjective;
    case Family::CayleyHyperbolic:
      return Family::CayleyProjective;
  }
  return family;
}

Multiplicities multiplicities(Family family, int n) {
  switch (family) {
    case Family::Sphere:
    case Family::RealProjective:
    case Family::RealHyperbolic:
      return {0, n - 1};
    case Family::ComplexProjective:
    case Family::ComplexHyperbolic:
      return {2 * n - 2, 1};
    case Family::QuaternionProjective:
    case Family::QuaternionHyperbolic:
      return {4 * n - 4, 3};
    case Family::CayleyProjective:
    case Family::CayleyHyperbolic:
      return {8, 7};
  }
  return {};
}

int min_dimension(Family) { return 2; }

int max_dimension(Family family) {
  // 1 << 20 is an arbitrary sanity cap; nothing in the formulas needs it.
  return is_cayley(family) ? 2 : (1 << 20);
}

double SpaceSpec::diameter() const {
  if (!compact) return std::numeric_limits<double>::infinity();
  if (family == Family::RealProjective) return std::numbers::pi * R / 2.0;
  return std::numbers::pi * R;
}

SpaceSpec make_space(Family family, int n, double R) {
  if (!(R > 0.0) || !std::isfinite(R)) {
    throw InvalidArgument("radius must be positive and finite");
  }
  if (n < min_dimension(family) || n > max_dimension(family)) {
    throw InvalidArgument("dimension n=" + std::to_string(n) +
                          " out of range for " +
                          std::string(family_name(family)));
  }
  SpaceSpec s;
  s.family = family;
  s.n = n;
  s.R = R;
  const auto m = multiplicities(family, n);
  s.q1 = m.q1;
  s.q2 = m.q2;
  s.compact = is_compact(family);
  s.r_interval = Interval{};
  if (!s.compact || family == Family::RealProjective) {
    s.r_interval.upper = 1.0;
  }
  return s;
}

void require_in_interval(const SpaceSpec& space, double r) {
  if (!space.r_interval.contains(r)) {
    throw InvalidArgument("r=" + std::to_string(r) +
                          " outside the radial interval");
  }
}

double distance_from_r(const SpaceSpec& space, double r) {
  require_in_interval(space, r);
  return 2.0 * space.R * (space.compact ? std::atan(r) : std::atanh(r));
}

double r_from_distance(const SpaceSpec& space, double p) {
  if (!(p > 0.0)) throw InvalidArgument("distance must be positive");
  const double t = p / (2.0 * space.R);
  if (space.compact) {
    const double lim = space.family == Family::RealProjective
                           ? std::numbers::pi / 4.0
                           : std::numbers::pi / 2.0;
    if (t >= lim) throw InvalidArgument("distance beyond the radial chart");
    return std::tan(t);
  }
  return std::tanh(t);
}

double distance_derivative(const SpaceSpec& space, double r) {
  const double w = space.compact ? 1.0 + r * r : 1.0 - r * r;
  return 2.0 * space.R / w;
}

}  // namespace twopoint
