#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "streett/states.hpp"

namespace streett {

/// One acceptance pair ⟨G(i), B(i)⟩. Both sets are kept sorted.
struct StreettPair {
  std::vector<StateId> good;
  std::vector<StateId> bad;

  friend bool operator==(const StreettPair&, const StreettPair&) = default;
};

/// A full Streett automaton over Σ = 2^{S×S} with
/// S = {q0..q(n-1)} ∪ {g1..gk} ∪ {b1..bk} ∪ {t}. The alphabet and the
/// transition relation are implicit: a letter is an edge relation on S and
/// acts as exactly that relation. All of Q is initial.
///
/// Instances are immutable; share freely across threads.
class FullStreettAutomaton {
 public:
  FullStreettAutomaton(std::uint32_t n, std::uint32_t pool_k,
                       std::vector<StreettPair> pairs);

  std::uint32_t n() const { return n_; }
  /// Size of the g-/b-state pools. Fixed at construction; index padding does
  /// not change the state set.
  std::uint32_t pool_k() const { return pool_k_; }
  /// |I|: number of acceptance pairs. Equals pool_k() for family members,
  /// larger after pad_index (trailing pairs empty).
  std::uint32_t index_size() const { return static_cast<std::uint32_t>(pairs_.size()); }
  std::span<const StreettPair> pairs() const { return pairs_; }

  std::size_t state_count() const { return streett::state_count(n_, pool_k_); }
  /// All states in canonical order.
  std::vector<StateId> states() const;
  std::vector<StateId> initial_states() const;

  friend bool operator==(const FullStreettAutomaton&, const FullStreettAutomaton&) = default;

 private:
  std::uint32_t n_;
  std::uint32_t pool_k_;
  std::vector<StreettPair> pairs_;
};

/// The (n, k) member of the family: pairs G(i) = {g_i}, B(i) = {b_i} for
/// i ∈ [1..k]. Throws std::invalid_argument when n = 0 or k = 0.
FullStreettAutomaton build_full_streett(std::uint32_t n, std::uint32_t k);

/// Extends the index set to k_new pairs; the added pairs are (∅, ∅) and the
/// state set is unchanged. Throws std::invalid_argument when
/// k_new < index_size. Empty pairs are vacuously satisfied under Streett
/// semantics, so acceptance is unaffected.
FullStreettAutomaton pad_index(const FullStreettAutomaton& aut, std::uint32_t k_new);

}  // namespace streett
