#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "streett/states.hpp"

namespace streett {

struct Edge {
  StateId src;
  StateId dst;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// One letter of the full-automaton alphabet: an edge relation on S, stored
/// as a sorted duplicate-free edge list (every letter of the construction has
/// at most n + 2 edges, so sparse wins). Equality is set equality.
class Letter {
 public:
  Letter(std::uint32_t n, std::uint32_t k, std::vector<Edge> edges);

  std::uint32_t n() const { return n_; }
  std::uint32_t k() const { return k_; }
  std::span<const Edge> edges() const { return edges_; }
  bool has_edge(StateId src, StateId dst) const;

  friend bool operator==(const Letter&, const Letter&) = default;

 private:
  std::uint32_t n_;
  std::uint32_t k_;
  std::vector<Edge> edges_;
};

/// Identity relation on all of S.
Letter identity_letter(std::uint32_t n, std::uint32_t k);

/// A finite word over 2^{S×S}; its run graph has size() + 1 levels and every
/// edge spans consecutive levels. (n, k) is carried explicitly so the empty
/// word stays typed.
class FiniteWord {
 public:
  FiniteWord(std::uint32_t n, std::uint32_t k);
  FiniteWord(std::uint32_t n, std::uint32_t k, std::vector<Letter> letters);

  std::uint32_t n() const { return n_; }
  std::uint32_t k() const { return k_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  void push_back(Letter letter);

  friend bool operator==(const FiniteWord&, const FiniteWord&) = default;

 private:
  std::uint32_t n_;
  std::uint32_t k_;
  std::vector<Letter> letters_;
};

/// Concatenation; the run graphs merge at the shared level, so the run graph
/// of the result is the concatenation of the run graphs. Throws
/// std::invalid_argument on (n, k) mismatch.
FiniteWord concat(const FiniteWord& a, const FiniteWord& b);
FiniteWord repeat(const FiniteWord& w, std::uint32_t times);

struct LevelVertex {
  StateId state;
  std::size_t level = 0;

  friend constexpr auto operator<=>(const LevelVertex&, const LevelVertex&) = default;
};

/// Run-graph edges between `level` and `level + 1`: the edge relation of
/// letters()[level] lifted to vertex pairs. Throws std::out_of_range when
/// level >= |w|.
std::vector<std::pair<LevelVertex, LevelVertex>> delta_graph_edges(const FiniteWord& w,
                                                                   std::size_t level);

/// Ultimately periodic word prefix · period^ω. The period must be nonempty;
/// the prefix may be empty.
class LassoWord {
 public:
  LassoWord(FiniteWord prefix, FiniteWord period);

  const FiniteWord& prefix() const { return prefix_; }
  const FiniteWord& period() const { return period_; }
  std::uint32_t n() const { return period_.n(); }
  std::uint32_t k() const { return period_.k(); }

  friend bool operator==(const LassoWord&, const LassoWord&) = default;

 private:
  FiniteWord prefix_;
  FiniteWord period_;
};

/// A path through consecutive levels of a run graph (or positions of a
/// product graph). states[i] sits at level start_level + i.
struct RunPath {
  std::vector<StateId> states;
  std::size_t start_level = 0;

  friend bool operator==(const RunPath&, const RunPath&) = default;
};

/// True iff every step of the path is an edge of the corresponding letter
/// and the path fits inside the word's levels.
bool replays_on(const RunPath& path, const FiniteWord& w);

}  // namespace streett
