#include <benchmark/benchmark.h>

#include <numbers>

#include "gnls/estimates.hpp"
#include "gnls/initial_data.hpp"
#include "gnls/multiplier.hpp"
#include "gnls/nls.hpp"
#include "gnls/norms.hpp"
#include "gnls/rng.hpp"
#include "gnls/spacetime.hpp"

using namespace gnls;

namespace {
constexpr double kPi = std::numbers::pi;
}

static void BM_TransformRoundTrip(benchmark::State& state) {
  const GridSpec g = make_grid(1, static_cast<int>(state.range(0)), 40.0);
  const Field f = sech_profile(g);
  for (auto _ : state) {
    Field rt = Field::from_spectrum(g, f.spectrum());
    benchmark::DoNotOptimize(rt.values().data());
  }
}
BENCHMARK(BM_TransformRoundTrip)->Arg(256)->Arg(1024)->Arg(4096);

static void BM_GevreyNorm(benchmark::State& state) {
  const GridSpec g = make_grid(1, static_cast<int>(state.range(0)), 40.0);
  const Field f = sech_profile(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gevrey_sobolev_norm(f, {0.3, 1.0}));
  }
}
BENCHMARK(BM_GevreyNorm)->Arg(1024)->Arg(4096);

static void BM_Nonlinearity(benchmark::State& state) {
  const GridSpec g = make_grid(1, static_cast<int>(state.range(0)), 40.0);
  const Field f = sech_profile(g);
  for (auto _ : state) {
    Field n = nonlinearity(f, 5);
    benchmark::DoNotOptimize(n.values().data());
  }
}
BENCHMARK(BM_Nonlinearity)->Arg(256)->Arg(1024);

static void BM_SplitStep(benchmark::State& state) {
  const GridSpec g = make_grid(1, static_cast<int>(state.range(0)), 40.0);
  Field u = sech_profile(g);
  for (auto _ : state) {
    u = step_splitstep(u, 1e-3, 5);
    benchmark::DoNotOptimize(u.values().data());
  }
}
BENCHMARK(BM_SplitStep)->Arg(512)->Arg(2048);

static void BM_SplitStep2d(benchmark::State& state) {
  const GridSpec g = make_grid(2, static_cast<int>(state.range(0)), 20.0);
  Field u = sech_profile(g);
  for (auto _ : state) {
    u = step_splitstep(u, 1e-3, 5);
    benchmark::DoNotOptimize(u.values().data());
  }
}
BENCHMARK(BM_SplitStep2d)->Arg(64)->Arg(128);

static void BM_PicardStep(benchmark::State& state) {
  const GridSpec g = make_grid(1, 512, 40.0);
  const Field u = sech_profile(g);
  PicardParams pp;
  for (auto _ : state) {
    Field v = step_duhamel_picard(u, 1e-2, 5, pp);
    benchmark::DoNotOptimize(v.values().data());
  }
}
BENCHMARK(BM_PicardStep);

static void BM_XsbNorm(benchmark::State& state) {
  const GridSpec g = make_grid(1, 128, 2 * kPi);
  SamplerConfig sc{g, 64, 2 * kPi};
  const SpaceTimeField f = sample_slab_field(sc, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(xsb_norm(f, {0.1, 1.0, 0.6}));
  }
}
BENCHMARK(BM_XsbNorm);

static void BM_EstimateSample(benchmark::State& state) {
  const GridSpec g = make_grid(1, 64, 2 * kPi);
  SamplerConfig sc{g, 64, 2 * kPi};
  EstimateParams par;
  Rng rng(5);
  std::vector<SpaceTimeField> in;
  for (int j = 0; j < 5; ++j) in.push_back(sample_slab_field(sc, rng));
  const auto pat = nls_conjugation_pattern(5);
  for (auto _ : state) {
    auto r = estimate_ratio(EstimateId::multilinear_l2, in, pat, par);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_EstimateSample);

BENCHMARK_MAIN();
