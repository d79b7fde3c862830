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

#include <memory>
#include <string_view>
#include <vector>

#include "twopoint/space_catalog.hpp"

namespace twopoint {

/// Interaction potential as a function of the radial coordinate.
///
///   free        U = 0
///   cotangent   U = -gamma cot(p/R)   (coth on noncompact spaces)
///   harmonic    U = k/2 tan^2(p/2R)   (tanh^2), which is k r^2 / 2
///   tabulated   monotone cubic (pchip) through samples (p_i, U_i)
///
/// Here p is the geodesic distance between the particles.
class Potential {
 public:
  enum class Kind { Free, Cotangent, Harmonic, Tabulated };

  Potential();
  static Potential free();
  static Potential cotangent(double gamma);
  static Potential harmonic(double k);
  // Needs at least four strictly increasing distances.
  static Potential tabulated(std::vector<double> distances,
                             std::vector<double> values);

  Kind kind() const { return kind_; }
  double value(const SpaceSpec& space, double r) const;
  // dU/dr.
  double derivative(const SpaceSpec& space, double r) const;

 private:
  struct Table;
  Kind kind_ = Kind::Free;
  double gamma_ = 0.0;
  double k_ = 0.0;
  std::shared_ptr<const Table> table_;
};

std::string_view potential_kind_name(Potential::Kind kind);

}  // namespace twopoint
