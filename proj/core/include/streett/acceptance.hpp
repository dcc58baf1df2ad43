#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "streett/automaton.hpp"
#include "streett/word.hpp"

namespace streett {

/// Finite product of the automaton with a lasso word: vertices are
/// ⟨state, position⟩ for positions in [0 .. |prefix|+|period|), edges follow
/// the letter at the source position, and the last position wraps back to
/// |prefix|. Immutable once built.
class ProductGraph {
 public:
  ProductGraph(const FullStreettAutomaton& aut, const LassoWord& lasso);

  std::uint32_t n() const { return n_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t prefix_length() const { return prefix_len_; }
  std::uint32_t period_length() const { return period_len_; }
  std::uint32_t position_count() const { return prefix_len_ + period_len_; }
  std::uint32_t states_per_position() const { return states_; }
  std::size_t vertex_count() const { return std::size_t{states_} * position_count(); }

  std::uint32_t vertex_id(StateId state, std::uint32_t position) const;
  StateId vertex_state(std::uint32_t id) const;
  std::uint32_t vertex_position(std::uint32_t id) const;
  std::uint32_t next_position(std::uint32_t position) const;

  std::span<const std::uint32_t> successors(std::uint32_t id) const { return out_[id]; }
  std::span<const std::uint32_t> initial_vertices() const { return initial_; }
  bool is_reachable(std::uint32_t id) const { return reachable_[id] != 0; }
  /// All vertices reachable from the initial ⟨q, 0⟩ vertices, ascending.
  std::vector<std::uint32_t> reachable_vertices() const;

 private:
  std::uint32_t n_;
  std::uint32_t k_;
  std::uint32_t states_;
  std::uint32_t prefix_len_;
  std::uint32_t period_len_;
  std::vector<std::vector<std::uint32_t>> out_;
  std::vector<std::uint32_t> initial_;
  std::vector<char> reachable_;
};

ProductGraph build_product(const FullStreettAutomaton& aut, const LassoWord& lasso);

/// Strongly connected components of the reachable part, each sorted
/// ascending, listed in a fixed order.
std::vector<std::vector<std::uint32_t>> reachable_sccs(const ProductGraph& product);

enum class AcceptanceCondition { streett, rabin };
std::string_view to_string(AcceptanceCondition condition);

/// Evaluation of ⟨G,B⟩_I / [G,B]_I on a set of states visited infinitely
/// often.
bool streett_satisfied(const FullStreettAutomaton& aut, std::span<const StateId> inf);
bool rabin_satisfied(const FullStreettAutomaton& aut, std::span<const StateId> inf);

struct AcceptanceVerdict {
  struct Witness {
    /// From an initial ⟨q, 0⟩ vertex to the loop anchor; start_level is a
    /// product position (0).
    RunPath stem;
    /// Closed walk starting and ending at the anchor vertex; start_level is
    /// the anchor's product position.
    RunPath loop;
    /// Exactly the states on the loop, sorted; this is Inf of the witness
    /// run and satisfies the claimed condition.
    std::vector<StateId> inf_states;

    friend bool operator==(const Witness&, const Witness&) = default;
  };

  bool accepted = false;
  std::optional<Witness> witness;

  friend bool operator==(const AcceptanceVerdict&, const AcceptanceVerdict&) = default;
};

/// Does some run over prefix·period^ω satisfy ⟨G,B⟩_I? Decided by recursive
/// SCC refinement on the product: within an SCC C, bad = {i : C touches G(i)
/// but not B(i)}; C with a cycle and bad = ∅ accepts, otherwise C's G(i)
/// vertices for i ∈ bad are removed and the parts are re-examined.
AcceptanceVerdict streett_accepts(const FullStreettAutomaton& aut, const LassoWord& lasso);

/// Dual check: some run with Inf ∩ G(i) ≠ ∅ and Inf ∩ B(i) = ∅ for some i.
AcceptanceVerdict rabin_accepts(const FullStreettAutomaton& aut, const LassoWord& lasso);

/// Replays a witness edge-by-edge through the lasso's letters, checks the
/// loop closes on one product vertex and re-evaluates the condition on
/// inf_states.
bool witness_replays(const FullStreettAutomaton& aut, const LassoWord& lasso,
                     const AcceptanceVerdict::Witness& witness, AcceptanceCondition condition);

/// JSON rendering of a verdict with witness stem/loop state sequences.
std::string verdict_to_string(const AcceptanceVerdict& verdict, AcceptanceCondition condition);

}  // namespace streett
