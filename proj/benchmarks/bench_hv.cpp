#include <benchmark/benchmark.h>

#include "hvkit/approx_line.hpp"
#include "hvkit/approx_mc.hpp"
#include "hvkit/dataset.hpp"
#include "hvkit/exact.hpp"
#include "hvkit/hvnet.hpp"
#include "hvkit/rng.hpp"

namespace {

using namespace hvkit;

SolutionSet fixture_set(std::size_t m, std::size_t n) {
  GenConfig cfg;
  cfg.objective_dim = m;
  cfg.max_set_size = n;
  cfg.candidate_pool = 1000;
  Rng rng(derive_seed(99, m * 1000 + n));
  // redraw until the size draw hits n so every run benchmarks the same shape
  for (;;) {
    SolutionSet s = generate_solution_set(cfg, rng);
    if (s.size() == n) {
      return s;
    }
  }
}

void BM_HvExact(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const std::size_t n = static_cast<std::size_t>(state.range(1));
  const SolutionSet s = fixture_set(m, n);
  const ReferencePoint r = ReferencePoint::unit(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hv_exact(s, r));
  }
}
BENCHMARK(BM_HvExact)
    ->Args({3, 10})
    ->Args({3, 50})
    ->Args({3, 100})
    ->Args({5, 50})
    ->Args({8, 50});

void BM_HvMonteCarlo(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const std::int64_t k = state.range(1);
  const SolutionSet s = fixture_set(m, 50);
  const ReferencePoint r = ReferencePoint::unit(m);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hv_mc(s, r, McConfig{k, seed++}));
  }
}
BENCHMARK(BM_HvMonteCarlo)->Args({3, 100})->Args({3, 1000})->Args({5, 1000});

void BM_HvLine(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const std::size_t n = static_cast<std::size_t>(state.range(1));
  const SolutionSet s = fixture_set(m, 50);
  const ReferencePoint r = ReferencePoint::unit(m);
  const DirectionSet dirs = generate_unv_directions(n, m, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hv_line(s, r, dirs));
  }
}
BENCHMARK(BM_HvLine)->Args({3, 10})->Args({3, 100})->Args({5, 100});

void BM_HvNetPredict(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const std::size_t n = static_cast<std::size_t>(state.range(1));
  const SolutionSet s = fixture_set(m, n);
  const HvNetModel model = make_hvnet(m, 128, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(predict(model, s));
  }
}
BENCHMARK(BM_HvNetPredict)->Args({3, 10})->Args({3, 50})->Args({3, 100})->Args({5, 50});

}  // namespace

BENCHMARK_MAIN();
