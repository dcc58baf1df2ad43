#pragma once

#include <cstdint>
#include <vector>

#include "streett/automaton.hpp"
#include "streett/ranking.hpp"
#include "streett/word.hpp"

namespace streett {

/// The letter vocabulary of the witness construction. The numeric-half
/// letters are Id(Q) plus one special edge; the index-half letters add the
/// ⟨t,t⟩ bypass self-loop; the To⁻ kinds additionally drop one horizontal
/// ⟨q,q⟩ edge, and t_to_minus_q drops ⟨t,t⟩ as well.
enum class LetterKind {
  id_q,
  id_t,
  q_to_b,
  b_to_b,
  b_to_g,
  q_to_g,
  g_to_t,
  b_to_q,
  q_to_minus_g,
  g_to_minus_t,
  t_to_minus_q,
};

/// Recipe for one construction letter. `from`/`to` are the indices the kind
/// needs (q-indices 0-based, g/b-indices 1-based); `track_owner` names the
/// q-state whose horizontal edge the To⁻ kinds remove; `with_bypass` adds
/// ⟨t,t⟩.
struct LetterTemplate {
  LetterKind kind;
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  std::uint32_t track_owner = 0;
  bool with_bypass = false;

  Letter instantiate(std::uint32_t n, std::uint32_t k) const;
};

/// Letter recipes of the numeric-half word for ranking r, in word order.
std::vector<LetterTemplate> r_word_templates(std::uint32_t n, std::uint32_t k,
                                             const NumericRanking& r);
/// Letter recipes of the index-half word for ranking h, in word order.
std::vector<LetterTemplate> h_word_templates(std::uint32_t n, std::uint32_t k,
                                             const IndexRanking& h);

/// Numeric-half witness word: for consecutive ranks, one block
/// Q(m_i)ToB(1) · B(1)ToB(2) · ... · B(k-1)ToB(k) · B(k)ToQ(m_{i+1}) where
/// m orders Q by strictly decreasing rank. Length (n-1)(k+1); contains no
/// ⟨t,t⟩ edges. Empty for n = 1.
FiniteWord build_r_word(const FullStreettAutomaton& aut, const NumericRanking& r);

/// Index-half witness word: per q-state one block of k segments; segment
/// j < k visits B(h(q)[j+1..k]) then G(h(q)[j]) then enters the bypass
/// track; segment j = k is Q(i)To⁻G(h(q)[k]) · G(h(q)[k])To⁻T · TTo⁻Q(i).
FiniteWord build_h_word(const FullStreettAutomaton& aut, const IndexRanking& h);

/// The canonical witness word of a ranking, paired with that ranking so the
/// verifier checks against exactly the f it was built for.
struct QWord {
  FiniteWord word;
  QRanking ranking;
};

/// R-half concatenated with H-half.
QWord build_q_word(const FullStreettAutomaton& aut, const QRanking& f);

std::size_t r_word_length(std::uint32_t n, std::uint32_t k);
std::size_t h_word_length(std::uint32_t n, std::uint32_t k);
std::size_t q_word_length(std::uint32_t n, std::uint32_t k);

}  // namespace streett
