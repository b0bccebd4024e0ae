#include <benchmark/benchmark.h>

#include <random>

#include "skewhopf/comodule.hpp"
#include "skewhopf/hopf.hpp"
#include "skewhopf/rewrite.hpp"

using namespace skewhopf;

namespace {

ValidatedChain growth_chain(int k) { return validate(preset("growth", {.k = k})); }

// Uniformly random words over the whole alphabet.
std::vector<Word> random_words(const ValidatedChain& chain, std::size_t count, std::size_t len) {
  std::mt19937_64 rng(5);
  const auto alphabet = chain.alphabet();
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::vector<Word> out;
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<Letter> letters;
    for (std::size_t k = 0; k < len; ++k) letters.push_back(alphabet[pick(rng)]);
    out.emplace_back(std::move(letters));
  }
  return out;
}

void BM_DeriveRules(benchmark::State& state) {
  const auto chain = growth_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rewrite::derive_rules(chain));
}
BENCHMARK(BM_DeriveRules)->DenseRange(2, 5);

void BM_NormalForm(benchmark::State& state) {
  const auto chain = validate(preset("collapse-m4"));
  const auto rules = rewrite::derive_rules(chain);
  const auto words = random_words(chain, 64, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const auto& w : words) benchmark::DoNotOptimize(rewrite::normal_form(rules, w));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words.size()));
}
BENCHMARK(BM_NormalForm)->RangeMultiplier(2)->Range(2, 16);

void BM_Confluence(benchmark::State& state) {
  const auto rules = rewrite::derive_rules(growth_chain(3));
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rewrite::check_confluence(rules, threads));
}
BENCHMARK(BM_Confluence)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CountReducedWords(benchmark::State& state) {
  const auto rules = rewrite::derive_rules(growth_chain(4));
  for (auto _ : state) benchmark::DoNotOptimize(rewrite::count_reduced_words(rules, state.range(0)));
}
BENCHMARK(BM_CountReducedWords)->Arg(4)->Arg(16)->Arg(64);

void BM_OracleDimension(benchmark::State& state) {
  const auto chain = validate(preset("collapse-m4", {.lo = -1, .hi = 0}));
  for (auto _ : state) benchmark::DoNotOptimize(rewrite::oracle_dimension(chain, state.range(0)));
}
BENCHMARK(BM_OracleDimension)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_Comultiply(benchmark::State& state) {
  const auto chain = growth_chain(3);
  const auto rules = rewrite::derive_rules(chain);
  const auto words = random_words(chain, 16, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const auto& w : words) benchmark::DoNotOptimize(hopf::comultiply(rules, NCPoly(w)));
  }
}
BENCHMARK(BM_Comultiply)->DenseRange(1, 3);

void BM_GrowthReport(benchmark::State& state) {
  const auto chain = growth_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(comodule::growth_report(chain));
}
BENCHMARK(BM_GrowthReport)->DenseRange(3, 6);

}  // namespace

BENCHMARK_MAIN();
