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

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "twopoint/errors.hpp"
#include "twopoint/lie_algebra.hpp"
#include "twopoint/radial_coefficients.hpp"

namespace twopoint {

// (r, p_r) is canonical; mu holds the momenta p_X over the full adapted
// basis order, k0 components included.
struct PhaseState {
  double r = 0.0;
  double p_r = 0.0;
  Eigen::VectorXd mu;
};

/// Reduced classical two-body system on G/K. Brackets of the momenta follow
/// {p_X, p_Y} = +p_[X,Y].
class ReducedSystem {
 public:
  ReducedSystem(AdaptedBasis basis, TwoBodyParams params);

  const AdaptedBasis& basis() const { return basis_; }
  const SpaceSpec& space() const { return basis_.space; }
  const TwoBodyParams& params() const { return params_; }
  int dim() const { return basis_.dim(); }

  PhaseState make_state(double r, double p_r) const;

  double hamiltonian(const PhaseState& s) const;
  // dH/dmu; zero on the k0 block.
  Eigen::VectorXd momentum_gradient(const PhaseState& s) const;
  // Time derivative of the state.
  PhaseState flow_field(const PhaseState& s) const;

  double casimir(const Eigen::VectorXd& mu) const;
  Eigen::VectorXd casimir_gradient(const Eigen::VectorXd& mu) const;
  double geodesic_regime_residual(const PhaseState& s) const;

 private:
  struct Term {
    int a, b, k;
    double c;
  };
  AdaptedBasis basis_;
  TwoBodyParams params_;
  Eigen::MatrixXd gram_inv_;
  std::vector<Term> terms_;
};

double casimir(const AdaptedBasis& basis, const Eigen::VectorXd& mu);

// max(|m1 alpha - m2 beta| / (m1 + m2), max |mu_a| over m-components other
// than p_L). The k0 block does not enter.
double geodesic_regime_residual(const AdaptedBasis& basis,
                                const TwoBodyParams& params,
                                const PhaseState& state);

struct Trajectory {
  std::vector<double> t;
  std::vector<PhaseState> states;
  std::vector<double> energy;
  std::vector<double> casimir;
  std::vector<double> geodesic_residual;

  std::size_t size() const { return t.size(); }
  // max |X(t) - X(0)| / |X(0)| (absolute when X(0) == 0).
  double energy_drift() const;
  double casimir_drift() const;
  double max_geodesic_residual() const;
};

struct IntegratorOptions {
  double dt = 1e-3;
  double t_end = 10.0;
  int sample_every = 1;
  // Integration stops when r comes within `guard` of an interval end.
  double guard = 1e-6;
};

class BoundaryReached : public Error {
 public:
  BoundaryReached(const std::string& what, Trajectory partial)
      : Error(what), partial_(std::move(partial)) {}
  const Trajectory& partial() const { return partial_; }

 private:
  Trajectory partial_;
};

class NonFiniteState : public Error {
 public:
  NonFiniteState(const std::string& what, Trajectory partial)
      : Error(what), partial_(std::move(partial)) {}
  const Trajectory& partial() const { return partial_; }

 private:
  Trajectory partial_;
};

// Classical RK4 with fixed step.
Trajectory integrate(const ReducedSystem& system, const PhaseState& state0,
                     const IntegratorOptions& options);

}  // namespace twopoint
