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

#include "twopoint/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace twopoint {
namespace {

PhaseState axpy(const PhaseState& s, double h, const PhaseState& k) {
  return {s.r + h * k.r, s.p_r + h * k.p_r, s.mu + h * k.mu};
}

bool finite(const PhaseState& s) {
  return std::isfinite(s.r) && std::isfinite(s.p_r) && s.mu.allFinite();
}

double drift(const std::vector<double>& x) {
  if (x.empty()) return 0.0;
  const double ref = std::abs(x.front());
  double worst = 0.0;
  for (double v : x) worst = std::max(worst, std::abs(v - x.front()));
  return ref > 0.0 ? worst / ref : worst;
}

}  // namespace

ReducedSystem::ReducedSystem(AdaptedBasis basis, TwoBodyParams params)
    : basis_(std::move(basis)), params_(std::move(params)) {
  params_.validate();
  gram_inv_ = basis_.gram.inverse();
  const int d = basis_.dim();
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int k = 0; k < d; ++k) {
        const double c = basis_.structure(a, b, k);
        if (c != 0.0) terms_.push_back({a, b, k, c});
      }
    }
  }
}

PhaseState ReducedSystem::make_state(double r, double p_r) const {
  return {r, p_r, Eigen::VectorXd::Zero(dim())};
}

double ReducedSystem::hamiltonian(const PhaseState& s) const {
  const auto c = inverse_coeffs(space(), params_, s.r);
  const auto& b = basis_;
  const auto& mu = s.mu;
  const double pL = mu(b.L());
  double h = c.g00 * s.p_r * s.p_r + 2.0 * c.g01 * s.p_r * pL + c.g11 * pL * pL;
  for (int i = 0; i < b.q1; ++i) {
    const double x = mu(b.e_lambda(i)), y = mu(b.f_lambda(i));
    h += c.D * x * x + c.F * y * y + 2.0 * c.E * x * y;
  }
  for (int j = 0; j < b.q2; ++j) {
    const double x = mu(b.e_2lambda(j)), y = mu(b.f_2lambda(j));
    h += c.C * x * x + c.A * y * y + 2.0 * c.B * x * y;
  }
  return 0.5 * h + params_.potential.value(space(), s.r);
}

Eigen::VectorXd ReducedSystem::momentum_gradient(const PhaseState& s) const {
  const auto c = inverse_coeffs(space(), params_, s.r);
  const auto& b = basis_;
  const auto& mu = s.mu;
  Eigen::VectorXd g = Eigen::VectorXd::Zero(dim());
  g(b.L()) = c.g01 * s.p_r + c.g11 * mu(b.L());
  for (int i = 0; i < b.q1; ++i) {
    const double x = mu(b.e_lambda(i)), y = mu(b.f_lambda(i));
    g(b.e_lambda(i)) = c.D * x + c.E * y;
    g(b.f_lambda(i)) = c.F * y + c.E * x;
  }
  for (int j = 0; j < b.q2; ++j) {
    const double x = mu(b.e_2lambda(j)), y = mu(b.f_2lambda(j));
    g(b.e_2lambda(j)) = c.C * x + c.B * y;
    g(b.f_2lambda(j)) = c.A * y + c.B * x;
  }
  return g;
}

PhaseState ReducedSystem::flow_field(const PhaseState& s) const {
  const auto c = inverse_coeffs(space(), params_, s.r);
  const auto dc = coeff_derivatives(space(), params_, s.r);
  const auto& b = basis_;
  const auto& mu = s.mu;
  const auto& d = dc.d;
  const double pL = mu(b.L());

  PhaseState out;
  out.r = c.g00 * s.p_r + c.g01 * pL;
  double dh = d.g00 * s.p_r * s.p_r + 2.0 * d.g01 * s.p_r * pL + d.g11 * pL * pL;
  for (int i = 0; i < b.q1; ++i) {
    const double x = mu(b.e_lambda(i)), y = mu(b.f_lambda(i));
    dh += d.D * x * x + d.F * y * y + 2.0 * d.E * x * y;
  }
  for (int j = 0; j < b.q2; ++j) {
    const double x = mu(b.e_2lambda(j)), y = mu(b.f_2lambda(j));
    dh += d.C * x * x + d.A * y * y + 2.0 * d.B * x * y;
  }
  out.p_r = -(0.5 * dh + dc.dU);

  const Eigen::VectorXd omega = momentum_gradient(s);
  out.mu = Eigen::VectorXd::Zero(dim());
  for (const auto& t : terms_) out.mu(t.a) += t.c * mu(t.k) * omega(t.b);
  return out;
}

double ReducedSystem::casimir(const Eigen::VectorXd& mu) const {
  return mu.dot(gram_inv_ * mu);
}

Eigen::VectorXd ReducedSystem::casimir_gradient(const Eigen::VectorXd& mu) const {
  return 2.0 * (gram_inv_ * mu);
}

double ReducedSystem::geodesic_regime_residual(const PhaseState& s) const {
  return twopoint::geodesic_regime_residual(basis_, params_, s);
}

double casimir(const AdaptedBasis& basis, const Eigen::VectorXd& mu) {
  return mu.dot(basis.gram.inverse() * mu);
}

double geodesic_regime_residual(const AdaptedBasis& basis,
                                const TwoBodyParams& params,
                                const PhaseState& state) {
  double res = std::abs(params.m1 * params.alpha - params.m2 * params.beta()) /
               (params.m1 + params.m2);
  for (int a = 1; a < basis.m_dim() && a < state.mu.size(); ++a) {
    res = std::max(res, std::abs(state.mu(a)));
  }
  return res;
}

double Trajectory::energy_drift() const { return drift(energy); }
double Trajectory::casimir_drift() const { return drift(casimir); }

double Trajectory::max_geodesic_residual() const {
  double m = 0.0;
  for (double v : geodesic_residual) m = std::max(m, v);
  return m;
}

Trajectory integrate(const ReducedSystem& system, const PhaseState& state0,
                     const IntegratorOptions& opt) {
  if (!(opt.dt > 0.0) || !(opt.t_end > 0.0) || opt.sample_every < 1) {
    throw InvalidArgument("integrator needs dt > 0, t_end > 0, sample_every >= 1");
  }
  if (state0.mu.size() != system.dim()) {
    throw InvalidArgument("momentum vector length does not match the algebra");
  }
  require_in_interval(system.space(), state0.r);

  Trajectory traj;
  auto record = [&](double t, const PhaseState& s) {
    traj.t.push_back(t);
    traj.states.push_back(s);
    traj.energy.push_back(system.hamiltonian(s));
    traj.casimir.push_back(system.casimir(s.mu));
    traj.geodesic_residual.push_back(system.geodesic_regime_residual(s));
  };

  const Interval iv = system.space().r_interval;
  const double lo = iv.lower + opt.guard;
  const double hi = iv.bounded() ? iv.upper - opt.guard : iv.upper;

  const long steps = static_cast<long>(std::ceil(opt.t_end / opt.dt - 1e-9));
  PhaseState s = state0;
  record(0.0, s);
  for (long n = 1; n <= steps; ++n) {
    const double t0 = (n - 1) * opt.dt;
    const double h = n == steps ? opt.t_end - t0 : opt.dt;
    PhaseState next;
    try {
      const PhaseState k1 = system.flow_field(s);
      const PhaseState k2 = system.flow_field(axpy(s, 0.5 * h, k1));
      const PhaseState k3 = system.flow_field(axpy(s, 0.5 * h, k2));
      const PhaseState k4 = system.flow_field(axpy(s, h, k3));
      next = s;
      next.r += h / 6.0 * (k1.r + 2.0 * k2.r + 2.0 * k3.r + k4.r);
      next.p_r += h / 6.0 * (k1.p_r + 2.0 * k2.p_r + 2.0 * k3.p_r + k4.p_r);
      next.mu += h / 6.0 * (k1.mu + 2.0 * k2.mu + 2.0 * k3.mu + k4.mu);
    } catch (const InvalidArgument& e) {
      // A stage left the radial interval.
      throw BoundaryReached(std::string("stage evaluation failed: ") + e.what(),
                            std::move(traj));
    } catch (const DegenerateBlock& e) {
      // Overflowing stages make the metric blocks numerically singular.
      throw NonFiniteState(std::string("stage evaluation failed: ") + e.what(),
                           std::move(traj));
    }
    if (!finite(next)) {
      throw NonFiniteState("non-finite state at t=" + std::to_string(t0 + h),
                           std::move(traj));
    }
    if (next.r < lo || next.r > hi) {
      throw BoundaryReached("r=" + std::to_string(next.r) +
                                " reached the interval guard at t=" +
                                std::to_string(t0 + h),
                            std::move(traj));
    }
    s = std::move(next);
    if (n % opt.sample_every == 0 || n == steps) record(t0 + h, s);
  }
  return traj;
}

}  // namespace twopoint
