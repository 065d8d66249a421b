#include <benchmark/benchmark.h>

#include "nalg/inequalities.hpp"

using namespace nalg;

namespace {

const MetrizedAlgebra<double>& herm_o() {
  static auto H = herm_jordan<double>(3, 8);
  return H;
}
const MetrizedAlgebra<double>& herm0_r() {
  static auto H = convert_metrized<double>(herm0<Q>(3, 1).ma);
  return H;
}

void BM_killing(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(killing_form(herm_o().alg));
}
void BM_killing_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(killing_form_serial(herm_o().alg));
}

void BM_newton(benchmark::State& st) {
  auto E = simplicial<double>(5);
  for (auto _ : st) benchmark::DoNotOptimize(newton_idempotents(E, int(st.range(0)), 1));
}
void BM_newton_serial(benchmark::State& st) {
  auto E = simplicial<double>(5);
  for (auto _ : st) benchmark::DoNotOptimize(newton_idempotents_serial(E, int(st.range(0)), 1));
}

void BM_sect(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(sect_extremize(herm0_r(), std::size_t(st.range(0)), 50, 1));
}
void BM_sect_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(sect_extremize_serial(herm0_r(), std::size_t(st.range(0)), 50, 1));
}

void BM_bw_sweep(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(bw_sweep(4, 4, std::size_t(st.range(0)), 1));
}
void BM_bw_sweep_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(bw_sweep_serial(4, 4, std::size_t(st.range(0)), 1));
}

}  // namespace

BENCHMARK(BM_killing)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_killing_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_newton)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_newton_serial)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sect)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sect_serial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bw_sweep)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bw_sweep_serial)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
