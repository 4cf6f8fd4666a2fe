#include <benchmark/benchmark.h>

#include "quartica/exact.hpp"
#include "quartica/quartic.hpp"
#include "quartica/triangle.hpp"

namespace {

using quartica::ExactInt;
using quartica::QuarticForm;
using quartica::SearchOptions;

const QuarticForm kForms[] = {{4, -5, 1}, {1, 10, 9}};

void BM_SearchSieved(benchmark::State& state) {
  const QuarticForm& form = kForms[state.range(0)];
  const std::int64_t bound = state.range(1);
  SearchOptions opts;
  opts.sieve_moduli = {3, 4};
  opts.workers = 1;
  for (auto _ : state) {
    auto cert = quartica::search(form, bound, opts);
    benchmark::DoNotOptimize(cert.pairs_scanned);
  }
  state.SetItemsProcessed(state.iterations() * bound * bound);
}
BENCHMARK(BM_SearchSieved)
    ->Args({0, 500})
    ->Args({0, 1000})
    ->Args({0, 2000})
    ->Args({1, 500})
    ->Args({1, 1000})
    ->Args({1, 2000});

void BM_SearchUnsieved(benchmark::State& state) {
  const QuarticForm& form = kForms[state.range(0)];
  const std::int64_t bound = state.range(1);
  SearchOptions opts;
  opts.workers = 1;
  for (auto _ : state) {
    auto cert = quartica::search(form, bound, opts);
    benchmark::DoNotOptimize(cert.pairs_scanned);
  }
  state.SetItemsProcessed(state.iterations() * bound * bound);
}
BENCHMARK(BM_SearchUnsieved)->Args({0, 1000})->Args({1, 1000});

void BM_IsqrtU64(benchmark::State& state) {
  std::uint64_t x = 0x9e3779b97f4a7c15ull;
  for (auto _ : state) {
    x = x * 6364136223846793005ull + 1442695040888963407ull;
    benchmark::DoNotOptimize(quartica::isqrt_floor_u64(x));
  }
}
BENCHMARK(BM_IsqrtU64);

void BM_IsqrtBig(benchmark::State& state) {
  const ExactInt n = (ExactInt(1) << state.range(0)) + 987654321;
  for (auto _ : state) {
    benchmark::DoNotOptimize(quartica::isqrt_floor(n));
  }
}
BENCHMARK(BM_IsqrtBig)->Arg(64)->Arg(128)->Arg(256)->Arg(512);

void BM_SieveBuild(benchmark::State& state) {
  const QuarticForm form{1, 10, 9};
  for (auto _ : state) {
    benchmark::DoNotOptimize(quartica::build_sieve(form, state.range(0)));
  }
}
BENCHMARK(BM_SieveBuild)->Arg(3)->Arg(16)->Arg(64)->Arg(256);

void BM_HeronEnumeration(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(quartica::enumerate_heron(state.range(0), {}));
  }
}
BENCHMARK(BM_HeronEnumeration)->Arg(100)->Arg(200)->Arg(400);

void BM_IsoscelesScan(benchmark::State& state) {
  for (auto _ : state) {
    auto scan = quartica::enumerate_isosceles_candidates(state.range(0));
    benchmark::DoNotOptimize(scan.candidates);
  }
}
BENCHMARK(BM_IsoscelesScan)->Arg(200)->Arg(500)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
