#include "pcoset/charfn.hpp"
#include "pcoset/relation.hpp"
#include "pcoset/sampling.hpp"
#include "pcoset/weil.hpp"

#include <benchmark/benchmark.h>

using namespace pcoset;

namespace {

const Prime kP = Prime::checked(5);

Module shuffled_lattice(std::size_t n, Rng& rng) {
  RatMatrix rows(2 * n, n);
  for (std::size_t i = 0; i < rows.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) rows(i, j) = PadicRational(rng.uniform(-12, 12)) / (i % 3 ? 1 : 5);
  return Module(n, RatMatrix(0, n), rows);
}

void BM_Canonicalize(benchmark::State& state) {
  Rng rng(1);
  const Module m = shuffled_lattice(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(m, kP));
}
BENCHMARK(BM_Canonicalize)->Arg(2)->Arg(4)->Arg(8);

void BM_Dual(benchmark::State& state) {
  Rng rng(2);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Module m = sample_selfdual(n, kP, rng);
  const SymplecticForm b = SymplecticForm::standard(n);
  for (auto _ : state) benchmark::DoNotOptimize(dual(m, b, kP));
}
BENCHMARK(BM_Dual)->Arg(1)->Arg(2)->Arg(4);

void BM_Compose(benchmark::State& state) {
  Rng rng(3);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Relation a = sample_selfdual_relation(n, n, kP, rng), b = sample_selfdual_relation(n, n, kP, rng);
  for (auto _ : state) benchmark::DoNotOptimize(compose(b, a, kP));
}
BENCHMARK(BM_Compose)->Arg(1)->Arg(2);

void BM_Chi(benchmark::State& state) {
  Rng rng(4);
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const BlockElement g = sample_block_element(1, 1, m, kP, rng);
  const Module q = sample_selfdual(1, kP, rng), t = sample_selfdual(1, kP, rng);
  ChiOptions opt;
  opt.cross_check = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(chi(g, q, t, kP, opt));
}
BENCHMARK(BM_Chi)->Args({1, 0})->Args({1, 1})->Args({2, 0})->Args({2, 1});

void BM_WeilOf(benchmark::State& state) {
  const FiniteModel model(Prime::checked(3), static_cast<int>(state.range(0)));
  const RatMatrix g = RatMatrix::of({{2, 1}, {1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(weil_of(model, g));
}
BENCHMARK(BM_WeilOf)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
