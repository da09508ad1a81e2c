// Compares the OpenMP kernels against their serial references on the two
// hot scans: the associativity triple check and the all-pairs
// congruence-freeness scan.

#include <benchmark/benchmark.h>

#include "isg/congruence.hpp"
#include "isg/constructions.hpp"
#include "isg/semigroup.hpp"

namespace {

isg::FiniteSemigroup bench_subject(int lambda) {
  return isg::brandt_extension(isg::cyclic_group(5), lambda);
}

void BM_associativity_serial(benchmark::State& state) {
  const auto s = bench_subject(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(isg::check_associativity_serial(s.table, s.order));
  }
  state.SetComplexityN(s.order);
}

void BM_associativity_parallel(benchmark::State& state) {
  const auto s = bench_subject(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(isg::check_associativity(s.table, s.order));
  }
  state.SetComplexityN(s.order);
}

void BM_congruence_free_serial(benchmark::State& state) {
  const auto s = bench_subject(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(isg::is_congruence_free_serial(s));
  }
}

void BM_congruence_free_parallel(benchmark::State& state) {
  const auto s = bench_subject(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(isg::is_congruence_free(s));
  }
}

}  // namespace

BENCHMARK(BM_associativity_serial)->Arg(2)->Arg(4)->Arg(6)->Complexity();
BENCHMARK(BM_associativity_parallel)->Arg(2)->Arg(4)->Arg(6)->Complexity();
BENCHMARK(BM_congruence_free_serial)->Arg(2)->Arg(3)->Arg(4);
BENCHMARK(BM_congruence_free_parallel)->Arg(2)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
