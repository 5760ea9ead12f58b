// Serial vs OpenMP timings for the data-parallel kernels.

#include <benchmark/benchmark.h>

#include "idinf/kernels.hpp"
#include "idinf/oracle.hpp"
#include "idinf/random.hpp"

namespace {

  using namespace idinf;
  namespace k = idinf::kernels;

  k::Exec exec_of(benchmark::State const& state) {
    return state.range(0) == 0 ? k::Exec::serial : k::Exec::parallel;
  }

  void oracle_trials(benchmark::State& state) {
    auto const exec = exec_of(state);
    for (auto _ : state) {
      auto r = k::sweep(
          2000,
          [](std::size_t i) {
            Rng  rng(mix_seed(7, i));
            auto p = random_element(rng, 50, 6);
            auto q = random_element(rng, 50, 6);
            return oracle::mul_check(p, q, oracle::auto_window({p, q}));
          },
          exec);
      benchmark::DoNotOptimize(r);
    }
    state.SetLabel(exec == k::Exec::serial ? "serial" : "parallel");
  }

  void scan(benchmark::State& state) {
    auto const exec = exec_of(state);
    for (auto _ : state) {
      auto r = k::equation_scan(1, exec);
      benchmark::DoNotOptimize(r);
    }
    state.SetLabel(exec == k::Exec::serial ? "serial" : "parallel");
  }

}  // namespace

BENCHMARK(oracle_trials)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(scan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
