// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "gkp/series.hpp"
#include "gkp/triangle.hpp"

using namespace gkp;

namespace {

const ParamTuple kSecondOrderEulerian = parse_params("0,1,1,2,-1,-1");
const ParamTuple kRationalTuple = parse_params("1/2,1/3,-2,3/4,-1/5,1");

// range(0) = N, range(1) selects the tuple (0 integer, 1 rational).
template <Triangle (*Kernel)(const ParamTuple&, int)>
void BM_Triangle(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const ParamTuple& p = state.range(1) == 0 ? kSecondOrderEulerian : kRationalTuple;
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(p, N));
}

TruncSeries<Rational> rational_series(int order) {
  TruncSeries<Rational> s(order);
  for (int i = 0; i <= order; ++i) s[i] = Rational(i % 7 - 3, i % 5 + 1);
  return s;
}

template <TruncSeries<Rational> (*Mul)(const TruncSeries<Rational>&, const TruncSeries<Rational>&)>
void BM_MulRational(benchmark::State& state) {
  const auto a = rational_series(static_cast<int>(state.range(0)));
  const auto b = rational_series(static_cast<int>(state.range(0))) * Rational(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Mul(a, b));
}

template <TruncSeries<Real> (*Mul)(const TruncSeries<Real>&, const TruncSeries<Real>&)>
void BM_MulReal(benchmark::State& state) {
  PrecisionScope scope(100);
  const auto a = convert<Real>(rational_series(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(Mul(a, a));
}

}  // namespace


BENCHMARK(BM_Triangle<triangle_serial>)->ArgsProduct({{64, 128, 256}, {0}})->ArgsProduct({{32, 64, 128}, {1}});
BENCHMARK(BM_Triangle<triangle_parallel>)->ArgsProduct({{64, 128, 256}, {0}})->ArgsProduct({{32, 64, 128}, {1}});

BENCHMARK(BM_MulRational<mul_serial<Rational>>)->RangeMultiplier(2)->Range(64, 512);
BENCHMARK(BM_MulRational<mul_parallel<Rational>>)->RangeMultiplier(2)->Range(64, 512);
BENCHMARK(BM_MulReal<mul_serial<Real>>)->RangeMultiplier(2)->Range(64, 512);
BENCHMARK(BM_MulReal<mul_parallel<Real>>)->RangeMultiplier(2)->Range(64, 512);

BENCHMARK_MAIN();
