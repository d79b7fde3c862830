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

#include "twopoint/potential.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

// Boost 1.74's pchip.hpp calls isnan unqualified.
namespace boost::math::interpolators {
using std::isnan;
}  // namespace boost::math::interpolators
#include <boost/math/interpolators/pchip.hpp>

#include "twopoint/errors.hpp"

namespace twopoint {

struct Potential::Table {
  double lo = 0.0;
  double hi = 0.0;
  boost::math::interpolators::pchip<std::vector<double>> spline;

  Table(std::vector<double> x, std::vector<double> y)
      : lo(x.front()), hi(x.back()), spline(std::move(x), std::move(y)) {}

  void check(double p) const {
    if (p < lo || p > hi) {
      throw InvalidArgument("distance " + std::to_string(p) +
                            " outside the tabulated potential range");
    }
  }
};

Potential::Potential() = default;

Potential Potential::free() { return Potential(); }

Potential Potential::cotangent(double gamma) {
  Potential u;
  u.kind_ = Kind::Cotangent;
  u.gamma_ = gamma;
  return u;
}

Potential Potential::harmonic(double k) {
  Potential u;
  u.kind_ = Kind::Harmonic;
  u.k_ = k;
  return u;
}

Potential Potential::tabulated(std::vector<double> distances,
                               std::vector<double> values) {
  if (distances.size() != values.size() || distances.size() < 4) {
    throw InvalidArgument("tabulated potential needs >= 4 matching samples");
  }
  if (!std::is_sorted(distances.begin(), distances.end(),
                      [](double a, double b) { return a <= b; })) {
    throw InvalidArgument("tabulated distances must be strictly increasing");
  }
  Potential u;
  u.kind_ = Kind::Tabulated;
  u.table_ = std::make_shared<const Table>(std::move(distances), std::move(values));
  return u;
}

double Potential::value(const SpaceSpec& space, double r) const {
  switch (kind_) {
    case Kind::Free:
      return 0.0;
    case Kind::Cotangent: {
      // cot(2 arctan r) = (1 - r^2) / 2r,  coth(2 artanh r) = (1 + r^2) / 2r.
      const double w = space.compact ? 1.0 - r * r : 1.0 + r * r;
      return -gamma_ * w / (2.0 * r);
    }
    case Kind::Harmonic:
      return 0.5 * k_ * r * r;
    case Kind::Tabulated: {
      const double p = distance_from_r(space, r);
      table_->check(p);
      return table_->spline(p);
    }
  }
  return 0.0;
}

double Potential::derivative(const SpaceSpec& space, double r) const {
  switch (kind_) {
    case Kind::Free:
      return 0.0;
    case Kind::Cotangent: {
      const double w = space.compact ? 1.0 + r * r : 1.0 - r * r;
      return gamma_ * w / (2.0 * r * r);
    }
    case Kind::Harmonic:
      return k_ * r;
    case Kind::Tabulated: {
      const double p = distance_from_r(space, r);
      table_->check(p);
      return table_->spline.prime(p) * distance_derivative(space, r);
    }
  }
  return 0.0;
}

std::string_view potential_kind_name(Potential::Kind kind) {
  switch (kind) {
    case Potential::Kind::Free: return "free";
    case Potential::Kind::Cotangent: return "cotangent";
    case Potential::Kind::Harmonic: return "harmonic";
    case Potential::Kind::Tabulated: return "tabulated";
  }
  return "?";
}

}  // namespace twopoint
