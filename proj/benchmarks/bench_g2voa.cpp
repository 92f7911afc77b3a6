#include "g2voa/appendix_b.hpp"
#include "g2voa/invariants.hpp"
#include "g2voa/singular.hpp"
#include "g2voa/zhu.hpp"

#include <benchmark/benchmark.h>

using namespace g2voa;

namespace {

void bm_straighten(benchmark::State& st) {
  auto len = static_cast<int>(st.range(0));
  affine_algebra alg(-12, 4);
  std::vector<int> w;
  for (int i = 0; i < len; ++i) w.push_back(alg.index((5 * i + 3) % g2::dim, -1 - (i % 2)));
  for (auto _ : st) {
    alg.clear_cache();
    benchmark::DoNotOptimize(alg.straighten(w));
  }
}
BENCHMARK(bm_straighten)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void bm_invariant_grade(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(invariants::grade(static_cast<int>(st.range(0))));
}
BENCHMARK(bm_invariant_grade)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void bm_solve_singular(benchmark::State& st) {
  auto lv = singular::level::from_n(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(singular::solve_singular(lv));
}
BENCHMARK(bm_solve_singular)->Arg(2)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

void bm_classify(benchmark::State& st) {
  auto sv = singular::solve_singular(singular::level::from_n(static_cast<int>(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(zhu::classify(sv));
}
BENCHMARK(bm_classify)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void bm_factor(benchmark::State& st) {
  // a degree-8 stage-2 style polynomial with a rational part and an irreducible sextic
  upoly f = upoly({0, 1}) * upoly({rational(7, 3), 1}) *
            upoly({rational(43696, 2673), rational(18196, 2673), rational(-24460, 891), rational(-2927, 297),
                   rational(91, 9), rational(211, 33), 1});
  for (auto _ : st) benchmark::DoNotOptimize(factor(f));
}
BENCHMARK(bm_factor)->Unit(benchmark::kMillisecond);

void bm_appendix_b(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(appendix::verify_appendix_b());
}
BENCHMARK(bm_appendix_b)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
