#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace streett {

/// Role of a state in the partitioned state space S = Q ∪ P_G ∪ P_B ∪ T.
enum class StateRole : std::uint8_t { q = 0, g = 1, b = 2, t = 3 };

/// One state of a full Streett automaton. The canonical order is role-major,
/// index-minor: q0 < ... < q(n-1) < g1 < ... < gk < b1 < ... < bk < t,
/// so sorted state and edge lists serialize deterministically.
struct StateId {
  StateRole role{StateRole::q};
  std::uint32_t index{0};  // q: 0..n-1; g,b: 1..k; t: unused

  static constexpr StateId q(std::uint32_t i) { return {StateRole::q, i}; }
  static constexpr StateId g(std::uint32_t i) { return {StateRole::g, i}; }
  static constexpr StateId b(std::uint32_t i) { return {StateRole::b, i}; }
  static constexpr StateId t() { return {StateRole::t, 0}; }

  friend constexpr auto operator<=>(const StateId&, const StateId&) = default;

  bool valid_for(std::uint32_t n, std::uint32_t k) const;

  /// Canonical name: "q0", "g1", "b2", "t".
  std::string name() const;
  static std::optional<StateId> parse(std::string_view text);
};

/// |S| = n + 2k + 1.
constexpr std::size_t state_count(std::uint32_t n, std::uint32_t k) {
  return std::size_t{n} + 2 * std::size_t{k} + 1;
}

/// Position of a state in the canonical order; inverse of state_at.
std::uint32_t dense_index(StateId s, std::uint32_t n, std::uint32_t k);
StateId state_at(std::uint32_t dense, std::uint32_t n, std::uint32_t k);

}  // namespace streett
