#include <benchmark/benchmark.h>

#include "strata/fiber.hpp"
#include "strata/gluing.hpp"
#include "strata/groupoid.hpp"

using namespace strata;

namespace {

RatMatrix dense_rational(int n) {
  RatMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = Rational(r * 13 + c * 7 - 40, c + 1);
  return m;
}

}  // namespace

static void BM_Compose20(benchmark::State& state) {
  RatMatrix a = dense_rational(20);
  for (auto _ : state) benchmark::DoNotOptimize(compose(a, a));
}
BENCHMARK(BM_Compose20);

static void BM_KernelBasis20(benchmark::State& state) {
  RatMatrix a = dense_rational(20);
  // make it singular so the kernel is nontrivial
  for (int c = 0; c < 20; ++c) a.at(19, c) = a.at(0, c);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(a));
}
BENCHMARK(BM_KernelBasis20);

static void BM_EnumerateFaces4(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_faces(4));
}
BENCHMARK(BM_EnumerateFaces4);

static void BM_OmegaT3(benchmark::State& state) {
  HyperbolicSheaf s = random_valid_sheaf(3, 5);
  LabelledTree t = tree_ma();
  for (auto _ : state) benchmark::DoNotOptimize(omega_T(s, t));
}
BENCHMARK(BM_OmegaT3);

static void BM_Comparison3(benchmark::State& state) {
  HyperbolicSheaf s = random_valid_sheaf(3, 5);
  LabelledTree t = tree_ma();
  for (auto _ : state) benchmark::DoNotOptimize(comparison(s, t));
}
BENCHMARK(BM_Comparison3);

static void BM_GlueRoundtrip(benchmark::State& state) {
  GluingDatum d = random_gluing_datum(7);
  for (auto _ : state) benchmark::DoNotOptimize(glue_forward(glue_backward(d)));
}
BENCHMARK(BM_GlueRoundtrip);

static void BM_WallLoops3(benchmark::State& state) {
  HyperbolicSheaf s = random_valid_sheaf(3, 9);
  CollisionSeq seq{{3, 2}, {1, 2}};
  for (auto _ : state) benchmark::DoNotOptimize(wall_loop_operators(s, seq, 2));
}
BENCHMARK(BM_WallLoops3);

BENCHMARK_MAIN();
