#include <benchmark/benchmark.h>

#include "vermalab/gtalg.hpp"

using namespace vermalab;

namespace {

const SparseMatrix& square_block() {
  static const SparseMatrix m = [] {
    VermaModule v(Generators::symbolic(4));
    return casimir_block(v.engine, 3, {3, 3, 3});
  }();
  return m;
}

void BM_MultiplySerial(benchmark::State& state) {
  const SparseMatrix& m = square_block();
  for (auto _ : state) benchmark::DoNotOptimize(exact::multiply_serial(m, m));
  state.counters["dim"] = static_cast<double>(m.rows());
}

void BM_MultiplyParallel(benchmark::State& state) {
  const SparseMatrix& m = square_block();
  for (auto _ : state) benchmark::DoNotOptimize(exact::multiply_parallel(m, m));
  state.counters["threads"] = exact::thread_budget();
}

template <GradedOperator (*Materialize)(const OperatorEngine&, int, int, const std::vector<Degree>&)>
void BM_Materialize(benchmark::State& state) {
  const auto window = degrees_up_to(4, static_cast<int>(state.range(0)));
  auto seeds = std::make_shared<VermaSeeds>(Generators::symbolic(4));
  for (auto _ : state) {
    OperatorEngine eng(seeds);
    benchmark::DoNotOptimize(Materialize(eng, 1, 4, window));
  }
}

}  // namespace

BENCHMARK(BM_MultiplySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplyParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Materialize<materialize_serial>)->Name("BM_MaterializeSerial")->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Materialize<materialize_parallel>)->Name("BM_MaterializeParallel")->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
