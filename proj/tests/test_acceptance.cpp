#include <random>

#include "doctest.h"

#include "streett/acceptance.hpp"
#include "streett/qword.hpp"
#include "streett/word_io.hpp"
#include "support/brute_force.hpp"
#include "support/random_gen.hpp"

using namespace streett;
using namespace streett::testing;

namespace {

const QRanking& example1_ranking() {
  static const QRanking f = QRanking::parse("r=[2,1,3];h=[[1,2],[1,2],[2,1]]");
  return f;
}

LassoWord pure_period(FiniteWord period) {
  FiniteWord empty(period.n(), period.k());
  return LassoWord(std::move(empty), std::move(period));
}

LassoWord rotate_once(const FiniteWord& period) {
  // prefix·period^ω with period v0 v1 ... vL = v0 · (v1 ... vL v0)^ω.
  FiniteWord prefix(period.n(), period.k());
  prefix.push_back(period[0]);
  FiniteWord rotated(period.n(), period.k());
  for (std::size_t i = 1; i < period.size(); ++i) rotated.push_back(period[i]);
  rotated.push_back(period[0]);
  return LassoWord(std::move(prefix), std::move(rotated));
}

}  // namespace

TEST_CASE("product graph shape") {
  const auto aut = build_full_streett(3, 2);
  const auto qword = build_q_word(aut, example1_ranking());
  const ProductGraph g(aut, pure_period(qword.word));
  CHECK(g.vertex_count() == 8 * 24);
  CHECK(g.position_count() == 24);
  CHECK(g.initial_vertices().size() == 3);

  SUBCASE("only q-vertices are reachable at position 0") {
    for (std::uint32_t d = 0; d < 8; ++d) {
      const StateId s = state_at(d, 3, 2);
      CHECK(g.is_reachable(g.vertex_id(s, 0)) == (s.role == StateRole::q));
    }
  }

  SUBCASE("identity period is one self-loop per state") {
    const auto small = build_full_streett(2, 1);
    const ProductGraph id_graph(small, pure_period(FiniteWord(2, 1, {identity_letter(2, 1)})));
    CHECK(id_graph.vertex_count() == 5);
    for (std::uint32_t v = 0; v < id_graph.vertex_count(); ++v) {
      REQUIRE(id_graph.successors(v).size() == 1);
      CHECK(id_graph.successors(v)[0] == v);
    }
  }

  SUBCASE("positions wrap into the period, not the prefix") {
    const auto small = build_full_streett(2, 1);
    const FiniteWord id(2, 1, {identity_letter(2, 1)});
    const ProductGraph wrapped(small, LassoWord(id, id));
    // Vertices at position 1 loop back to position 1.
    CHECK(wrapped.next_position(0) == 1);
    CHECK(wrapped.next_position(1) == 1);
  }

  CHECK_THROWS_AS(ProductGraph(aut, pure_period(FiniteWord(2, 2, {identity_letter(2, 2)}))),
                  std::invalid_argument);
}

TEST_CASE("condition evaluation on Inf sets is dual") {
  const auto aut = build_full_streett(2, 2);
  const std::vector<StateId> owes{StateId::q(0), StateId::g(1)};
  const std::vector<StateId> discharged{StateId::q(0), StateId::g(1), StateId::b(1)};
  const std::vector<StateId> silent{StateId::q(0)};
  CHECK_FALSE(streett_satisfied(aut, owes));
  CHECK(rabin_satisfied(aut, owes));
  CHECK(streett_satisfied(aut, discharged));
  CHECK_FALSE(rabin_satisfied(aut, discharged));
  CHECK(streett_satisfied(aut, silent));  // vacuous
  CHECK_FALSE(rabin_satisfied(aut, silent));
}

TEST_CASE("identity lasso: vacuous Streett acceptance, Rabin rejection") {
  const auto aut = build_full_streett(3, 2);
  const auto lasso = pure_period(FiniteWord(3, 2, {identity_letter(3, 2)}));
  const auto verdict = streett_accepts(aut, lasso);
  CHECK(verdict.accepted);
  REQUIRE(verdict.witness.has_value());
  CHECK(witness_replays(aut, lasso, *verdict.witness, AcceptanceCondition::streett));
  CHECK(verdict.witness->inf_states == std::vector<StateId>{StateId::q(0)});
  CHECK_FALSE(rabin_accepts(aut, lasso).accepted);
}

TEST_CASE("witness-word periods are rejected by Streett and accepted by Rabin") {
  const auto aut = build_full_streett(3, 2);
  const auto qword = build_q_word(aut, example1_ranking());
  const auto lasso = pure_period(qword.word);

  const auto streett_verdict = streett_accepts(aut, lasso);
  CHECK_FALSE(streett_verdict.accepted);
  CHECK_FALSE(streett_verdict.witness.has_value());

  const auto rabin_verdict = rabin_accepts(aut, lasso);
  CHECK(rabin_verdict.accepted);
  REQUIRE(rabin_verdict.witness.has_value());
  CHECK(witness_replays(aut, lasso, *rabin_verdict.witness, AcceptanceCondition::rabin));

  SUBCASE("verdicts and witnesses are deterministic") {
    const auto again = rabin_accepts(aut, lasso);
    REQUIRE(again.witness.has_value());
    CHECK(again.witness->stem == rabin_verdict.witness->stem);
    CHECK(again.witness->loop == rabin_verdict.witness->loop);
    CHECK(again.witness->inf_states == rabin_verdict.witness->inf_states);
  }
}

TEST_CASE("mixed periods of two different rankings are accepted") {
  const auto aut = build_full_streett(3, 2);
  const auto all = enumerate_q_rankings(3, 2);
  const auto base = build_q_word(aut, example1_ranking()).word;

  // One partner differing in the numeric half, one differing only in the
  // index half.
  const QRanking swapped_r = QRanking::parse("r=[3,1,2];h=[[1,2],[1,2],[2,1]]");
  const QRanking swapped_h = QRanking::parse("r=[2,1,3];h=[[2,1],[1,2],[2,1]]");
  for (const QRanking& partner : {swapped_r, swapped_h}) {
    const auto other = build_q_word(aut, partner).word;
    const auto lasso = pure_period(concat(base, other));
    const auto verdict = streett_accepts(aut, lasso);
    CHECK(verdict.accepted);
    REQUIRE(verdict.witness.has_value());
    CHECK(witness_replays(aut, lasso, *verdict.witness, AcceptanceCondition::streett));
    CHECK(streett_satisfied(aut, verdict.witness->inf_states));
  }

  SUBCASE("a few enumerated pairs, both orders") {
    for (std::size_t i : {std::size_t{0}, std::size_t{17}}) {
      for (std::size_t j : {std::size_t{5}, std::size_t{47}}) {
        if (i == j) continue;
        const auto w = concat(build_q_word(aut, all[i]).word, build_q_word(aut, all[j]).word);
        CHECK(streett_accepts(aut, pure_period(w)).accepted);
      }
    }
  }
}

TEST_CASE("acceptance is insensitive to prefix copies and rotation") {
  const auto aut = build_full_streett(2, 2);
  for (const auto& f : enumerate_q_rankings(2, 2)) {
    const auto word = build_q_word(aut, f).word;
    const bool plain = streett_accepts(aut, pure_period(word)).accepted;
    CHECK(streett_accepts(aut, LassoWord(word, word)).accepted == plain);
    CHECK(streett_accepts(aut, rotate_once(word)).accepted == plain);
    const bool rabin_plain = rabin_accepts(aut, pure_period(word)).accepted;
    CHECK(rabin_accepts(aut, rotate_once(word)).accepted == rabin_plain);
  }
}

TEST_CASE("index padding changes no verdict") {
  const auto aut = build_full_streett(3, 2);
  const auto padded = pad_index(aut, 4);
  const auto all = enumerate_q_rankings(3, 2);
  for (const auto& f : all) {
    const auto lasso = pure_period(build_q_word(aut, f).word);
    CHECK(streett_accepts(aut, lasso).accepted == streett_accepts(padded, lasso).accepted);
    CHECK(rabin_accepts(aut, lasso).accepted == rabin_accepts(padded, lasso).accepted);
  }
  // Accepted lassos stay accepted as well.
  const auto mixed = pure_period(concat(build_q_word(aut, all[0]).word,
                                        build_q_word(aut, all[1]).word));
  CHECK(streett_accepts(aut, mixed).accepted);
  CHECK(streett_accepts(padded, mixed).accepted);
}

TEST_CASE("profiles of enumerated loops satisfy exactly one of the dual conditions") {
  std::mt19937_64 rng(31);
  int loops_checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t n = 1 + rng() % 3;
    const std::uint32_t k = 1 + rng() % 2;
    const auto aut = build_full_streett(n, k);
    const auto lasso = random_lasso(n, k, rng() % 2, 1 + rng() % 3, rng, 0.3);
    const ProductGraph g(aut, lasso);
    // Walk deterministically from each reachable vertex until a vertex
    // repeats; the cycle part is the Inf of one concrete run.
    for (std::uint32_t start : g.reachable_vertices()) {
      std::vector<std::uint32_t> order;
      std::vector<int> seen_at(g.vertex_count(), -1);
      std::uint32_t v = start;
      while (seen_at[v] < 0 && !g.successors(v).empty()) {
        seen_at[v] = static_cast<int>(order.size());
        order.push_back(v);
        v = g.successors(v).front();
      }
      if (seen_at[v] < 0) continue;  // walk died out, no loop
      std::vector<StateId> inf;
      for (std::size_t i = static_cast<std::size_t>(seen_at[v]); i < order.size(); ++i) {
        inf.push_back(g.vertex_state(order[i]));
      }
      std::sort(inf.begin(), inf.end());
      inf.erase(std::unique(inf.begin(), inf.end()), inf.end());
      CHECK(streett_satisfied(aut, inf) != rabin_satisfied(aut, inf));
      ++loops_checked;
    }
  }
  CHECK(loops_checked > 100);
}

TEST_CASE("recursive check agrees with the subset-enumeration oracle") {
  std::mt19937_64 rng(32);
  int compared = 0;
  while (compared < 60) {
    const std::uint32_t n = 1 + rng() % 3;
    const std::uint32_t k = 1 + rng() % 2;
    const auto aut = build_full_streett(n, k);
    const auto lasso = random_lasso(n, k, rng() % 3, 1 + rng() % 4, rng, 0.18);
    const ProductGraph g(aut, lasso);
    bool small_enough = true;
    for (const auto& comp : reachable_sccs(g)) small_enough &= comp.size() <= 14;
    if (!small_enough) continue;
    CHECK(streett_accepts(aut, lasso).accepted ==
          brute_force_accepts(aut, lasso, AcceptanceCondition::streett));
    CHECK(rabin_accepts(aut, lasso).accepted ==
          brute_force_accepts(aut, lasso, AcceptanceCondition::rabin));
    ++compared;
  }
}

TEST_CASE("tampered witnesses fail the replay check") {
  const auto aut = build_full_streett(3, 2);
  const auto lasso = pure_period(build_q_word(aut, example1_ranking()).word);
  auto verdict = rabin_accepts(aut, lasso);
  REQUIRE(verdict.witness.has_value());
  auto witness = *verdict.witness;
  REQUIRE(witness_replays(aut, lasso, witness, AcceptanceCondition::rabin));

  auto clipped = witness;
  clipped.loop.states.pop_back();
  CHECK_FALSE(witness_replays(aut, lasso, clipped, AcceptanceCondition::rabin));

  auto shifted = witness;
  shifted.loop.start_level += 1;
  CHECK_FALSE(witness_replays(aut, lasso, shifted, AcceptanceCondition::rabin));

  auto lying = witness;
  lying.inf_states.push_back(StateId::b(1));
  std::sort(lying.inf_states.begin(), lying.inf_states.end());
  CHECK_FALSE(witness_replays(aut, lasso, lying, AcceptanceCondition::rabin));
}

TEST_CASE("verdict reports carry the witness runs") {
  const auto aut = build_full_streett(3, 2);
  const auto lasso = pure_period(build_q_word(aut, example1_ranking()).word);
  const std::string rejected = verdict_to_string(streett_accepts(aut, lasso),
                                                 AcceptanceCondition::streett);
  CHECK(rejected.find("\"accepted\": false") != std::string::npos);
  CHECK(rejected.find("\"witness\": null") != std::string::npos);
  const std::string accepted = verdict_to_string(rabin_accepts(aut, lasso),
                                                 AcceptanceCondition::rabin);
  CHECK(accepted.find("\"accepted\": true") != std::string::npos);
  CHECK(accepted.find("\"stem\"") != std::string::npos);
  CHECK(accepted.find("\"loop\"") != std::string::npos);
  CHECK(accepted.find("\"inf_states\"") != std::string::npos);
}
