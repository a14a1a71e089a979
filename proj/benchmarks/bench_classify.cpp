#include <benchmark/benchmark.h>

#include <random>

#include "braid3/braid_word.hpp"
#include "braid3/homology_rep.hpp"
#include "braid3/murasugi.hpp"
#include "braid3/report.hpp"
#include "braid3/seifert_oracle.hpp"

namespace {

braid3::BraidWord random_word(std::size_t length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 3);
  constexpr braid3::Letter kLetters[] = {braid3::kX, braid3::kXInv, braid3::kY,
                                         braid3::kYInv};
  braid3::BraidWord w;
  for (std::size_t i = 0; i < length; ++i) {
    w.push_back(kLetters[coin(rng)]);
  }
  return w;
}

void BM_Image(benchmark::State& state) {
  auto const w = random_word(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(braid3::image(w));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Image)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_Classify(benchmark::State& state) {
  auto const w = random_word(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(braid3::classify(w));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Classify)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_SeifertOracle(benchmark::State& state) {
  auto const w = random_word(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) {
    auto const v = braid3::seifert_matrix(w);
    benchmark::DoNotOptimize(braid3::sym_signature(v));
  }
}
BENCHMARK(BM_SeifertOracle)->RangeMultiplier(2)->Range(8, 64);

void BM_AnalyzeReport(benchmark::State& state) {
  auto const w = braid3::parse("h x y^-5 x y^-2 x^3 y");
  for (auto _ : state) {
    benchmark::DoNotOptimize(braid3::to_json(braid3::analyze(w)));
  }
}
BENCHMARK(BM_AnalyzeReport);

}  // namespace

BENCHMARK_MAIN();
