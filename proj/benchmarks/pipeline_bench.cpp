// Copyright 2026 The scattering Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <benchmark/benchmark.h>

#include "scattering/curve/cusp_structure.hpp"
#include "scattering/height/canonical_height.hpp"
#include "scattering/model/tate.hpp"
#include "scattering/pairing/finite_pairing.hpp"
#include "scattering/solver/scattering.hpp"
#include "scattering_cli/config.hpp"
#include "scattering_cli/pipeline.hpp"

namespace {

using namespace scattering;

void BM_Tate(benchmark::State& state) {
  EllipticCurve e = default_curve();
  for (auto _ : state) {
    benchmark::DoNotOptimize(tate_fiber(e, 2));
    benchmark::DoNotOptimize(tate_fiber(e, 5));
  }
}
BENCHMARK(BM_Tate);

void BM_RegularModel(benchmark::State& state) {
  EllipticCurve e = default_curve();
  auto cusps = default_cusps();
  for (auto _ : state) benchmark::DoNotOptimize(build_regular_model(e, cusps));
}
BENCHMARK(BM_RegularModel);

void BM_CanonicalHeight(benchmark::State& state) {
  PrecisionContext ctx(static_cast<int>(state.range(0)));
  EllipticCurve e = default_curve();
  RationalPoint g = default_generator();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_height(e, g, ctx));
}
BENCHMARK(BM_CanonicalHeight)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMicrosecond);

void BM_DeltaTable(benchmark::State& state) {
  RegularModel m = build_regular_model(default_curve(), default_cusps());
  for (auto _ : state) benchmark::DoNotOptimize(delta_table(m));
}
BENCHMARK(BM_DeltaTable)->Unit(benchmark::kMicrosecond);

void BM_Solve(benchmark::State& state) {
  cli::FullRun r = cli::run_all(cli::default_config());
  auto masters = cli::pick(r.solver.masters, r.prepared.config.master_rows);
  auto labels = r.cusps.cusps.labels();
  for (auto _ : state) benchmark::DoNotOptimize(solve_all(labels, r.cusps.relations, masters));
}
BENCHMARK(BM_Solve)->Unit(benchmark::kMicrosecond);

void BM_FullPipeline(benchmark::State& state) {
  cli::RunConfig cfg = cli::default_config();
  for (auto _ : state) benchmark::DoNotOptimize(cli::run_all(cfg));
}
BENCHMARK(BM_FullPipeline)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
