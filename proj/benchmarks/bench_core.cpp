// Copyright 2026 The coheq Authors
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

#include <coheq/channel.hpp>
#include <coheq/nevpick.hpp>
#include <coheq/norms.hpp>
#include <coheq/sdp.hpp>
#include <coheq/synthesis.hpp>

namespace {

coheq::ChannelModel cavity(double sw) { return coheq::new_cavity_channel(0.4, 5.0, 10.0, {0.1, sw}); }

void BM_RationalEval(benchmark::State& state) {
  const auto d = coheq::cavity_gamma_search(cavity(0.2)).design;
  const auto f = coheq::error_psd_rational(cavity(0.2), d.h11);
  double w = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.on_axis(w));
    w += 1e-3;
  }
}
BENCHMARK(BM_RationalEval);

void BM_AxisSupremum(benchmark::State& state) {
  const auto ch = cavity(0.2);
  const auto f = coheq::error_psd_rational(ch, coheq::cavity_gamma_search(ch).design.h11);
  for (auto _ : state) benchmark::DoNotOptimize(coheq::sup_real_on_axis(f).value);
}
BENCHMARK(BM_AxisSupremum);

void BM_GridSolve(benchmark::State& state) {
  const auto ch = cavity(4.0);
  const auto grid = coheq::paper_grid();
  for (auto _ : state) benchmark::DoNotOptimize(coheq::grid_solve(ch, grid).gamma_tilde_sq);
}
BENCHMARK(BM_GridSolve);

void BM_InterpolantEval(benchmark::State& state) {
  const auto ch = cavity(4.0);
  const auto grid = coheq::paper_grid();
  const auto sol = coheq::grid_solve(ch, grid);
  const auto values = coheq::shrink_to_interior(sol.h11_values, 1.0 - 1e-6);
  const auto pick = coheq::build_pick_on_axis(grid.points(), values, 1e-3);
  const auto h = coheq::interpolant(pick, coheq::RationalFunction(0.0));
  double w = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(h.on_axis(w));
    w += 1e-3;
  }
}
BENCHMARK(BM_InterpolantEval);

void BM_CavityGammaSearch(benchmark::State& state) {
  const auto ch = cavity(0.2);
  for (auto _ : state) benchmark::DoNotOptimize(coheq::cavity_gamma_search(ch).gamma_sq);
}
BENCHMARK(BM_CavityGammaSearch)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
