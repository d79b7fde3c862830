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

#include <benchmark/benchmark.h>

#include "twopoint/dynamics.hpp"
#include "twopoint/embedded_model.hpp"
#include "twopoint/mass_center.hpp"

namespace tp = twopoint;

namespace {

// Arg 0: family index into all_families(); arg 1: n.
void BM_AdaptedBasis(benchmark::State& state) {
  const auto f = tp::all_families()[state.range(0)];
  const auto space = tp::make_space(f, static_cast<int>(state.range(1)), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(tp::build_adapted_basis(space));
}
BENCHMARK(BM_AdaptedBasis)->Args({0, 2})->Args({0, 6})->Args({2, 2})->Args({2, 4})->Args({6, 3})
    ->Unit(benchmark::kMicrosecond);

void BM_InverseCoeffs(benchmark::State& state) {
  const auto space = tp::make_space(tp::all_families()[state.range(0)], 2, 1.0);
  const tp::TwoBodyParams p{1.0, 2.0, 0.4, tp::Potential::free()};
  double r = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tp::inverse_coeffs(space, p, r));
    r = r < 0.8 ? r + 1e-6 : 0.3;
  }
}
BENCHMARK(BM_InverseCoeffs)->DenseRange(0, 8);

void BM_FlowField(benchmark::State& state) {
  const auto space = tp::make_space(tp::Family::ComplexProjective, static_cast<int>(state.range(0)), 1.0);
  const tp::ReducedSystem sys(tp::build_adapted_basis(space),
                              {1.0, 2.0, 0.5, tp::Potential::cotangent(0.3)});
  tp::PhaseState s = sys.make_state(0.5, 0.1);
  for (int i = 0; i < s.mu.size(); ++i) s.mu(i) = 0.1 * (i + 1);
  for (auto _ : state) benchmark::DoNotOptimize(sys.flow_field(s));
  state.SetLabel("dim g = " + std::to_string(sys.dim()));
}
BENCHMARK(BM_FlowField)->DenseRange(2, 4);

void BM_Integrate(benchmark::State& state) {
  const tp::ReducedSystem sys(tp::build_adapted_basis(tp::make_space(tp::Family::Sphere, 2, 1.0)),
                              {1.0, 2.0, 0.5, tp::Potential::free()});
  tp::PhaseState s = sys.make_state(0.2, -0.5);
  s.mu << 0.5, 0.44, 0.38;
  tp::IntegratorOptions opt;
  opt.t_end = 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(tp::integrate(sys, s, opt));
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_Integrate)->Unit(benchmark::kMillisecond);

void BM_CenterR3(benchmark::State& state) {
  const tp::CenterQuery q{tp::make_space(tp::Family::RealHyperbolic, 2, 1.0), 1.0, 2.0, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(tp::center_r3(q));
}
BENCHMARK(BM_CenterR3);

void BM_UpsilonMinimize(benchmark::State& state) {
  const auto space = tp::make_space(tp::Family::RealHyperbolic, 2, 1.0);
  const auto m = tp::embedded_model(space);
  std::vector<tp::Particle> ps;
  for (int k = 0; k < state.range(0); ++k) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(3);
    v(1) = 0.8 * std::cos(k);
    v(2) = 0.8 * std::sin(k);
    ps.push_back({m.exp(m.base_point(), v), 1.0 + k});
  }
  for (auto _ : state) benchmark::DoNotOptimize(tp::upsilon_minimize(space, ps));
}
BENCHMARK(BM_UpsilonMinimize)->Arg(2)->Arg(5)->Unit(benchmark::kMicrosecond);

}  // namespace

// The packaged benchmark_main archive is built with a different LTO version.
BENCHMARK_MAIN();
