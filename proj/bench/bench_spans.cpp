#include <benchmark/benchmark.h>

#include "voakit/spans.hpp"

using namespace voakit;

namespace {

const VOA& boson() {
  static const VOA A = VOA::free_boson(20);
  return A;
}

void generators(benchmark::State& state, bool parallel) {
  const SpanRequest req{SpanKind::On, 0, static_cast<int>(state.range(1)), static_cast<int>(state.range(0)), 4};
  for (auto _ : state) {
    boson().clear_cache();
    benchmark::DoNotOptimize(span_generators(boson(), req, parallel));
  }
}

void build(benchmark::State& state, bool parallel) {
  const SpanRequest req{SpanKind::ODagger, 0, 1, static_cast<int>(state.range(0)), 4};
  for (auto _ : state) {
    boson().clear_cache();
    benchmark::DoNotOptimize(build_span(boson(), req, parallel));
  }
}

void BM_GeneratorsSerial(benchmark::State& s) { generators(s, false); }
void BM_GeneratorsParallel(benchmark::State& s) { generators(s, true); }
void BM_BuildSpanSerial(benchmark::State& s) { build(s, false); }
void BM_BuildSpanParallel(benchmark::State& s) { build(s, true); }

}  // namespace

BENCHMARK(BM_GeneratorsSerial)->Args({6, 0})->Args({8, 0})->Args({6, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GeneratorsParallel)->Args({6, 0})->Args({8, 0})->Args({6, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildSpanSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildSpanParallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
