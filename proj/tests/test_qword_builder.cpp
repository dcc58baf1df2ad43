#include <fstream>
#include <sstream>

#include "doctest.h"

#include "streett/qword.hpp"
#include "streett/verifier.hpp"
#include "streett/word_io.hpp"
#include "support/test_env.hpp"

using namespace streett;
using namespace streett::testing;

namespace {

Letter L(std::uint32_t n, std::uint32_t k, const std::string& line) {
  return parse_letter(n, k, line);
}

const QRanking& example1_ranking() {
  static const QRanking f = QRanking::parse("r=[2,1,3];h=[[1,2],[1,2],[2,1]]");
  return f;
}

bool has_bypass_edge(const Letter& letter) { return letter.has_edge(StateId::t(), StateId::t()); }

}  // namespace

TEST_CASE("letter templates instantiate the construction vocabulary") {
  // Numeric-half letters carry no bypass self-loop.
  CHECK(LetterTemplate{LetterKind::q_to_b, 2, 1}.instantiate(3, 2) ==
        L(3, 2, "q0>q0,q1>q1,q2>q2,q2>b1"));
  CHECK(LetterTemplate{LetterKind::b_to_q, 2, 0}.instantiate(3, 2) ==
        L(3, 2, "q0>q0,q1>q1,q2>q2,b2>q0"));
  // Index-half letters do.
  CHECK(LetterTemplate{LetterKind::q_to_b, 1, 2, 0, true}.instantiate(3, 2) ==
        L(3, 2, "q0>q0,q1>q1,q1>b2,q2>q2,t>t"));
  CHECK(LetterTemplate{LetterKind::b_to_g, 2, 1, 0, true}.instantiate(3, 2) ==
        L(3, 2, "q0>q0,q1>q1,q2>q2,b2>g1,t>t"));
  CHECK(LetterTemplate{LetterKind::g_to_t, 1, 0, 0, true}.instantiate(3, 2) ==
        L(3, 2, "q0>q0,q1>q1,q2>q2,g1>t,t>t"));
  CHECK(LetterTemplate{LetterKind::q_to_g, 0, 2, 0, true}.instantiate(3, 2) ==
        L(3, 2, "q0>q0,q0>g2,q1>q1,q2>q2,t>t"));
  // The To⁻ kinds break the owner's track; t_to_minus_q also drops ⟨t,t⟩.
  CHECK(LetterTemplate{LetterKind::q_to_minus_g, 1, 2, 1, true}.instantiate(3, 2) ==
        L(3, 2, "q0>q0,q1>g2,q2>q2,t>t"));
  CHECK(LetterTemplate{LetterKind::g_to_minus_t, 2, 0, 1, true}.instantiate(3, 2) ==
        L(3, 2, "q0>q0,q2>q2,g2>t,t>t"));
  CHECK(LetterTemplate{LetterKind::t_to_minus_q, 0, 1, 1, false}.instantiate(3, 2) ==
        L(3, 2, "q0>q0,q2>q2,t>q1"));
  CHECK(LetterTemplate{LetterKind::id_q}.instantiate(2, 1) == L(2, 1, "q0>q0,q1>q1"));
  CHECK(LetterTemplate{LetterKind::id_t}.instantiate(2, 1) == L(2, 1, "t>t"));
}

TEST_CASE("numeric-half word walks ranks downward through the b-chain") {
  const auto aut = build_full_streett(3, 2);
  const auto word = build_r_word(aut, example1_ranking().numeric());
  REQUIRE(word.size() == 6);
  // First block: Q(2)ToB(1) · B(1)ToB(2) · B(2)ToQ(0); ranks 3 -> 2.
  CHECK(word[0] == L(3, 2, "q0>q0,q1>q1,q2>q2,q2>b1"));
  CHECK(word[1] == L(3, 2, "q0>q0,q1>q1,q2>q2,b1>b2"));
  CHECK(word[2] == L(3, 2, "q0>q0,q1>q1,q2>q2,b2>q0"));
  // Second block: ranks 2 -> 1.
  CHECK(word[3] == L(3, 2, "q0>q0,q0>b1,q1>q1,q2>q2"));
  CHECK(word[5] == L(3, 2, "q0>q0,q1>q1,q2>q2,b2>q1"));
  for (const Letter& letter : word.letters()) CHECK_FALSE(has_bypass_edge(letter));

  SUBCASE("n = 1 has zero blocks") {
    CHECK(build_r_word(build_full_streett(1, 3), {1}).empty());
  }

  SUBCASE("(2,1) instance") {
    const auto small = build_full_streett(2, 1);
    const auto w = build_r_word(small, {2, 1});
    REQUIRE(w.size() == 2);
    CHECK(w[0] == L(2, 1, "q0>q0,q0>b1,q1>q1"));
    CHECK(w[1] == L(2, 1, "q0>q0,q1>q1,b1>q1"));
    // The downward-path property already holds on the numeric half alone.
    CHECK(check_property_1(w, QRanking({2, 1}, {{1}, {1}})).holds);
  }

  SUBCASE("length is (n-1)(k+1) across the family") {
    for (std::uint32_t n = 1; n <= 4; ++n) {
      for (std::uint32_t k = 1; k <= 3; ++k) {
        NumericRanking r(n);
        for (std::uint32_t i = 0; i < n; ++i) r[i] = n - i;
        CHECK(build_r_word(build_full_streett(n, k), r).size() == r_word_length(n, k));
        CHECK(r_word_length(n, k) == (n - 1) * (k + 1));
      }
    }
  }

  CHECK_THROWS_AS(build_r_word(aut, {1, 1, 2}), std::invalid_argument);
}

TEST_CASE("index-half word spends one segment per state and index") {
  const auto aut = build_full_streett(3, 2);
  const auto word = build_h_word(aut, example1_ranking().index());
  REQUIRE(word.size() == 18);
  // Block for q1 (levels 6..12 of the half-word): first segment
  // Q(1)ToB(2) · B(2)ToG(1) · G(1)ToT.
  CHECK(word[6] == L(3, 2, "q0>q0,q1>q1,q1>b2,q2>q2,t>t"));
  CHECK(word[7] == L(3, 2, "q0>q0,q1>q1,q2>q2,b2>g1,t>t"));
  CHECK(word[8] == L(3, 2, "q0>q0,q1>q1,q2>q2,g1>t,t>t"));
  // Closing segment of q1's block: the broken track and the forced return.
  CHECK(word[9] == L(3, 2, "q0>q0,q1>g2,q2>q2,t>t"));
  CHECK(word[10] == L(3, 2, "q0>q0,q2>q2,g2>t,t>t"));
  CHECK(word[11] == L(3, 2, "q0>q0,q2>q2,t>q1"));
  // q2's block uses h(q2) = <2,1>.
  CHECK(word[12] == L(3, 2, "q0>q0,q1>q1,q2>q2,q2>b1,t>t"));
  CHECK(word[13] == L(3, 2, "q0>q0,q1>q1,q2>q2,b1>g2,t>t"));

  SUBCASE("(1,1) degenerates to the closing segment alone") {
    const auto tiny = build_full_streett(1, 1);
    const auto w = build_h_word(tiny, {{1}});
    REQUIRE(w.size() == 3);
    CHECK(w[0] == L(1, 1, "q0>g1,t>t"));
    CHECK(w[1] == L(1, 1, "g1>t,t>t"));
    CHECK(w[2] == L(1, 1, "t>q0"));
  }

  SUBCASE("length formula") {
    CHECK(h_word_length(3, 2) == 18);
    for (std::uint32_t n = 1; n <= 4; ++n) {
      for (std::uint32_t k = 1; k <= 3; ++k) {
        IndexRanking h(n, std::vector<std::uint32_t>(k));
        for (auto& perm : h) {
          for (std::uint32_t i = 0; i < k; ++i) perm[i] = i + 1;
        }
        CHECK(build_h_word(build_full_streett(n, k), h).size() == h_word_length(n, k));
        CHECK(h_word_length(n, k) == n * ((k - 1) * k / 2 + 2 * (k - 1) + 3));
      }
    }
  }

  CHECK_THROWS_AS(build_h_word(aut, {{1, 2}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(build_h_word(aut, {{1, 2}, {1, 2}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("witness word equals the golden fixture edge for edge") {
  const auto aut = build_full_streett(3, 2);
  const auto qword = build_q_word(aut, example1_ranking());
  CHECK(qword.ranking == example1_ranking());
  CHECK(qword.word.size() == 24);

  std::ifstream golden(data_file("example1_qword.fsw"));
  REQUIRE(golden);
  std::ostringstream buf;
  buf << golden.rdbuf();
  CHECK(serialize_word(qword.word) == buf.str());

  // Same inputs, same word.
  CHECK(build_q_word(aut, example1_ranking()).word == qword.word);
}

TEST_CASE("every witness word of an instance has the same length") {
  const auto aut = build_full_streett(3, 2);
  for (const auto& f : enumerate_q_rankings(3, 2)) {
    CHECK(build_q_word(aut, f).word.size() == 24);
  }
  CHECK(q_word_length(1, 1) == 3);
  CHECK(build_q_word(build_full_streett(1, 1), QRanking({1}, {{1}})).word.size() == 3);
}

TEST_CASE("build_q_word rejects mismatched dimensions") {
  const auto aut = build_full_streett(3, 2);
  CHECK_THROWS_AS(build_q_word(aut, QRanking({1, 2}, {{1, 2}, {2, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(build_q_word(aut, QRanking({1, 2, 3}, {{1}, {1}, {1}})), std::invalid_argument);
}
