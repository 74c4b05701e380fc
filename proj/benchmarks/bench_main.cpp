#include <benchmark/benchmark.h>

#include "htr/hurwitz_oracle.hpp"
#include "htr/recursion.hpp"

using namespace htr;

namespace {

void BM_SeriesMul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LaurentSeries a = log1p_series(Field::Rational, n);
  const LaurentSeries b = exp_series(Field::Rational, n);
  for (auto _ : state) benchmark::DoNotOptimize(series_mul(a, b));
}
BENCHMARK(BM_SeriesMul)->Arg(16)->Arg(32)->Arg(64);

void BM_SeriesMulSymbolic(benchmark::State& state) {
  const LaurentSeries g = log_x_increment(CurveSpec::framed_symbolic(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(series_mul(g, g));
}
BENCHMARK(BM_SeriesMulSymbolic)->Arg(8)->Arg(16);

void BM_LambertInvolution(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lambert_model(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LambertInvolution)->Arg(10)->Arg(20)->Arg(40);

void BM_FramedInvolution(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(make_curve_model(CurveSpec::framed_symbolic(), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FramedInvolution)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_LambertAmplitude(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const int h = static_cast<int>(state.range(1));
  for (auto _ : state) {
    AmplitudeCache cache;
    benchmark::DoNotOptimize(w_amplitude(cache, CurveSpec::lambert(), g, h));
  }
}
BENCHMARK(BM_LambertAmplitude)->Args({2, 1})->Args({3, 1})->Args({2, 2})->Unit(benchmark::kMillisecond);

void BM_FramedW2(benchmark::State& state) {
  RecursionOptions opts;
  opts.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    AmplitudeCache cache;
    benchmark::DoNotOptimize(w_amplitude(cache, CurveSpec::framed_symbolic(), 2, 1, opts));
  }
}
BENCHMARK(BM_FramedW2)->Arg(1)->Arg(4)->Unit(benchmark::kSecond)->Iterations(1)->UseRealTime();

void BM_OracleFreeEnergy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(HurwitzSeries::partition_function(2 * n + 2, n).log());
}
BENCHMARK(BM_OracleFreeEnergy)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
