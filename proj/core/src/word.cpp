#include "streett/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace streett {

Letter::Letter(std::uint32_t n, std::uint32_t k, std::vector<Edge> edges)
    : n_(n), k_(k), edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (!e.src.valid_for(n_, k_) || !e.dst.valid_for(n_, k_)) {
      throw std::invalid_argument("letter edge " + e.src.name() + ">" + e.dst.name() +
                                  " has an endpoint outside the (n,k) state set");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Letter::has_edge(StateId src, StateId dst) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{src, dst});
}

Letter identity_letter(std::uint32_t n, std::uint32_t k) {
  std::vector<Edge> edges;
  edges.reserve(state_count(n, k));
  for (std::uint32_t d = 0; d < state_count(n, k); ++d) {
    StateId s = state_at(d, n, k);
    edges.push_back(Edge{s, s});
  }
  return Letter(n, k, std::move(edges));
}

FiniteWord::FiniteWord(std::uint32_t n, std::uint32_t k) : n_(n), k_(k) {}

FiniteWord::FiniteWord(std::uint32_t n, std::uint32_t k, std::vector<Letter> letters)
    : n_(n), k_(k), letters_(std::move(letters)) {
  for (const Letter& l : letters_) {
    if (l.n() != n_ || l.k() != k_) throw std::invalid_argument("letters of a word must share one (n,k)");
  }
}

void FiniteWord::push_back(Letter letter) {
  if (letter.n() != n_ || letter.k() != k_) throw std::invalid_argument("letters of a word must share one (n,k)");
  letters_.push_back(std::move(letter));
}

FiniteWord concat(const FiniteWord& a, const FiniteWord& b) {
  if (a.n() != b.n() || a.k() != b.k()) throw std::invalid_argument("concat: mismatched (n,k)");
  std::vector<Letter> letters(a.letters().begin(), a.letters().end());
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return FiniteWord(a.n(), a.k(), std::move(letters));
}

FiniteWord repeat(const FiniteWord& w, std::uint32_t times) {
  FiniteWord out(w.n(), w.k());
  for (std::uint32_t i = 0; i < times; ++i) {
    for (const Letter& l : w.letters()) out.push_back(l);
  }
  return out;
}

std::vector<std::pair<LevelVertex, LevelVertex>> delta_graph_edges(const FiniteWord& w,
                                                                   std::size_t level) {
  if (level >= w.size()) throw std::out_of_range("delta_graph_edges: level out of range");
  std::vector<std::pair<LevelVertex, LevelVertex>> out;
  out.reserve(w[level].edges().size());
  for (const Edge& e : w[level].edges()) {
    out.emplace_back(LevelVertex{e.src, level}, LevelVertex{e.dst, level + 1});
  }
  return out;
}

LassoWord::LassoWord(FiniteWord prefix, FiniteWord period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("lasso period must be nonempty");
  if (prefix_.n() != period_.n() || prefix_.k() != period_.k()) {
    throw std::invalid_argument("lasso prefix and period must share one (n,k)");
  }
}

bool replays_on(const RunPath& path, const FiniteWord& w) {
  if (path.states.empty()) return false;
  if (path.start_level + path.states.size() - 1 > w.size()) return false;
  for (std::size_t i = 0; i + 1 < path.states.size(); ++i) {
    if (!w[path.start_level + i].has_edge(path.states[i], path.states[i + 1])) return false;
  }
  return true;
}

}  // namespace streett
