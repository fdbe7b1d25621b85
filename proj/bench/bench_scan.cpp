#include "bernkit/scan.hpp"

#include <benchmark/benchmark.h>

using namespace bernkit;

namespace {

std::vector<ScanTask> tasks_up_to(int n_max) {
  ScanConfig c;
  c.identities = {"euler", "miki", "fpz", "mixed", "family-miki", "family-fpz", "gessel"};
  c.n_max = n_max;
  c.p_values = {frac(1, 2), 3, frac(-1, 4)};
  return make_tasks(c);
}

void BM_ScanSerial(benchmark::State &state) {
  const std::vector<ScanTask> tasks = tasks_up_to(static_cast<int>(state.range(0)));
  scan_serial(tasks);
  for (auto _ : state)
    benchmark::DoNotOptimize(scan_serial(tasks));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(tasks.size()));
}

void BM_ScanParallel(benchmark::State &state) {
  const std::vector<ScanTask> tasks = tasks_up_to(static_cast<int>(state.range(0)));
  const int jobs = static_cast<int>(state.range(1));
  scan_parallel(tasks, jobs);
  for (auto _ : state)
    benchmark::DoNotOptimize(scan_parallel(tasks, jobs));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(tasks.size()));
}

} // namespace

BENCHMARK(BM_ScanSerial)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ScanParallel)
    ->ArgsProduct({{20, 40, 80}, {2, 4, 0}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
