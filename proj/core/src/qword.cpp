#include "streett/qword.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace streett {

namespace {

void append_id_q(std::vector<Edge>& edges, std::uint32_t n) {
  for (std::uint32_t i = 0; i < n; ++i) edges.push_back(Edge{StateId::q(i), StateId::q(i)});
}

void erase_edge(std::vector<Edge>& edges, Edge e) {
  edges.erase(std::remove(edges.begin(), edges.end(), e), edges.end());
}

}  // namespace

Letter LetterTemplate::instantiate(std::uint32_t n, std::uint32_t k) const {
  std::vector<Edge> edges;
  edges.reserve(n + 3);
  switch (kind) {
    case LetterKind::id_q:
      append_id_q(edges, n);
      break;
    case LetterKind::id_t:
      edges.push_back(Edge{StateId::t(), StateId::t()});
      break;
    case LetterKind::q_to_b:
      append_id_q(edges, n);
      edges.push_back(Edge{StateId::q(from), StateId::b(to)});
      break;
    case LetterKind::b_to_b:
      append_id_q(edges, n);
      edges.push_back(Edge{StateId::b(from), StateId::b(to)});
      break;
    case LetterKind::b_to_g:
      append_id_q(edges, n);
      edges.push_back(Edge{StateId::b(from), StateId::g(to)});
      break;
    case LetterKind::q_to_g:
      append_id_q(edges, n);
      edges.push_back(Edge{StateId::q(from), StateId::g(to)});
      break;
    case LetterKind::g_to_t:
      append_id_q(edges, n);
      edges.push_back(Edge{StateId::g(from), StateId::t()});
      break;
    case LetterKind::b_to_q:
      append_id_q(edges, n);
      edges.push_back(Edge{StateId::b(from), StateId::q(to)});
      break;
    case LetterKind::q_to_minus_g:
      append_id_q(edges, n);
      edges.push_back(Edge{StateId::q(from), StateId::g(to)});
      erase_edge(edges, Edge{StateId::q(from), StateId::q(from)});
      break;
    case LetterKind::g_to_minus_t:
      append_id_q(edges, n);
      edges.push_back(Edge{StateId::g(from), StateId::t()});
      erase_edge(edges, Edge{StateId::q(track_owner), StateId::q(track_owner)});
      break;
    case LetterKind::t_to_minus_q:
      // No bypass self-loop: every path that entered the t-track must leave
      // for q_to at the end of the block.
      append_id_q(edges, n);
      edges.push_back(Edge{StateId::t(), StateId::q(to)});
      erase_edge(edges, Edge{StateId::q(to), StateId::q(to)});
      return Letter(n, k, std::move(edges));
  }
  if (with_bypass) edges.push_back(Edge{StateId::t(), StateId::t()});
  return Letter(n, k, std::move(edges));
}

std::vector<LetterTemplate> r_word_templates(std::uint32_t n, std::uint32_t k,
                                             const NumericRanking& r) {
  if (!is_numeric_ranking(r, n)) {
    throw std::invalid_argument("r-word needs a bijective numeric ranking");
  }
  // m[0..n-1]: q-indices ordered by strictly decreasing rank.
  std::vector<std::uint32_t> m(n);
  std::iota(m.begin(), m.end(), 0u);
  std::sort(m.begin(), m.end(), [&](std::uint32_t a, std::uint32_t b) { return r[a] > r[b]; });

  std::vector<LetterTemplate> out;
  out.reserve(r_word_length(n, k));
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    out.push_back({LetterKind::q_to_b, m[i], 1});
    for (std::uint32_t j = 1; j < k; ++j) out.push_back({LetterKind::b_to_b, j, j + 1});
    out.push_back({LetterKind::b_to_q, k, m[i + 1]});
  }
  return out;
}

std::vector<LetterTemplate> h_word_templates(std::uint32_t n, std::uint32_t k,
                                             const IndexRanking& h) {
  if (!is_index_ranking(h, n, k)) {
    throw std::invalid_argument("h-word needs a permutation of [1..k] per state");
  }
  std::vector<LetterTemplate> out;
  out.reserve(h_word_length(n, k));
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto& hi = h[i];  // 1-based in values, 0-based in storage
    auto at = [&](std::uint32_t j) { return hi[j - 1]; };
    for (std::uint32_t j = 1; j < k; ++j) {
      out.push_back({LetterKind::q_to_b, i, at(j + 1), 0, true});
      for (std::uint32_t l = j + 1; l < k; ++l) {
        out.push_back({LetterKind::b_to_b, at(l), at(l + 1), 0, true});
      }
      out.push_back({LetterKind::b_to_g, at(k), at(j), 0, true});
      out.push_back({LetterKind::g_to_t, at(j), 0, 0, true});
    }
    out.push_back({LetterKind::q_to_minus_g, i, at(k), i, true});
    out.push_back({LetterKind::g_to_minus_t, at(k), 0, i, true});
    out.push_back({LetterKind::t_to_minus_q, 0, i, i, false});
  }
  return out;
}

namespace {

FiniteWord instantiate_all(std::uint32_t n, std::uint32_t k,
                           const std::vector<LetterTemplate>& templates) {
  FiniteWord w(n, k);
  for (const LetterTemplate& t : templates) w.push_back(t.instantiate(n, k));
  return w;
}

}  // namespace

FiniteWord build_r_word(const FullStreettAutomaton& aut, const NumericRanking& r) {
  return instantiate_all(aut.n(), aut.pool_k(), r_word_templates(aut.n(), aut.pool_k(), r));
}

FiniteWord build_h_word(const FullStreettAutomaton& aut, const IndexRanking& h) {
  return instantiate_all(aut.n(), aut.pool_k(), h_word_templates(aut.n(), aut.pool_k(), h));
}

QWord build_q_word(const FullStreettAutomaton& aut, const QRanking& f) {
  if (f.n() != aut.n() || f.k() != aut.pool_k()) {
    throw std::invalid_argument("ranking dimensions do not match the automaton");
  }
  return QWord{concat(build_r_word(aut, f.numeric()), build_h_word(aut, f.index())), f};
}

std::size_t r_word_length(std::uint32_t n, std::uint32_t k) {
  return std::size_t{n - 1} * (std::size_t{k} + 1);
}

std::size_t h_word_length(std::uint32_t n, std::uint32_t k) {
  // Per state: segments j = 1..k-1 of length k-j+2, plus the final length-3
  // segment.
  std::size_t per_state = 3;
  for (std::size_t j = 1; j < k; ++j) per_state += k - j + 2;
  return std::size_t{n} * per_state;
}

std::size_t q_word_length(std::uint32_t n, std::uint32_t k) {
  return r_word_length(n, k) + h_word_length(n, k);
}

}  // namespace streett
