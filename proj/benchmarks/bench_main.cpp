#include "benchmark/benchmark.h"

#include "streett/acceptance.hpp"
#include "streett/qword.hpp"
#include "streett/verifier.hpp"

using namespace streett;

namespace {

QRanking example_ranking() { return QRanking::parse("r=[2,1,3];h=[[1,2],[1,2],[2,1]]"); }

void BM_BuildQWord(benchmark::State& state) {
  const auto aut = build_full_streett(static_cast<std::uint32_t>(state.range(0)),
                                      static_cast<std::uint32_t>(state.range(1)));
  std::vector<std::uint32_t> r(aut.n());
  for (std::uint32_t i = 0; i < aut.n(); ++i) r[i] = aut.n() - i;
  IndexRanking h(aut.n(), std::vector<std::uint32_t>(aut.pool_k()));
  for (auto& perm : h) {
    for (std::uint32_t i = 0; i < aut.pool_k(); ++i) perm[i] = i + 1;
  }
  const QRanking f(r, h);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_q_word(aut, f));
  }
}
BENCHMARK(BM_BuildQWord)->Args({3, 2})->Args({5, 4})->Args({8, 6});

void BM_CheckAllProperties(benchmark::State& state) {
  const auto aut = build_full_streett(3, 2);
  const auto qword = build_q_word(aut, example_ranking());
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_all_properties(qword.word, qword.ranking));
  }
}
BENCHMARK(BM_CheckAllProperties);

void BM_StreettAccepts(benchmark::State& state) {
  const auto aut = build_full_streett(3, 2);
  const auto word = build_q_word(aut, example_ranking()).word;
  const LassoWord lasso(FiniteWord(3, 2), word);
  for (auto _ : state) {
    benchmark::DoNotOptimize(streett_accepts(aut, lasso));
  }
}
BENCHMARK(BM_StreettAccepts);

void BM_MixedPairAccepts(benchmark::State& state) {
  const auto aut = build_full_streett(3, 2);
  const auto all = enumerate_q_rankings(3, 2, 2);
  const LassoWord lasso(FiniteWord(3, 2),
                        concat(build_q_word(aut, all[0]).word, build_q_word(aut, all[1]).word));
  for (auto _ : state) {
    benchmark::DoNotOptimize(streett_accepts(aut, lasso));
  }
}
BENCHMARK(BM_MixedPairAccepts);

}  // namespace

BENCHMARK_MAIN();
