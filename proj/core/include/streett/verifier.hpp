#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "streett/ranking.hpp"
#include "streett/word.hpp"

namespace streett {

inline constexpr std::size_t kDefaultPathCap = 1'000'000;

/// Raised when a path enumeration would exceed the configured cap; callers
/// never see a silently truncated result.
class PathCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Which acceptance-pair indices a path touches. A path visits G(i)/B(i) iff
/// some vertex of the path (endpoints included) is the g_i/b_i state.
struct PathVisitProfile {
  RunPath path;
  std::vector<std::uint32_t> visited_good;  // sorted
  std::vector<std::uint32_t> visited_bad;   // sorted

  friend bool operator==(const PathVisitProfile&, const PathVisitProfile&) = default;
};

PathVisitProfile profile_of(RunPath path);

enum class QWordProperty { p1 = 1, p2 = 2, p3 = 3, p4 = 4 };
std::string_view to_string(QWordProperty property);

/// Outcome of one structural check. When holds is false, either
/// counterexample carries an offending path or detail names the missing
/// witness; when P1/P2 hold, witnesses carry the supporting paths.
struct PropertyReport {
  QWordProperty property{QWordProperty::p1};
  bool holds = false;
  std::vector<PathVisitProfile> witnesses;
  std::optional<PathVisitProfile> counterexample;
  std::string detail;
};

/// All level-0 → level-|w| paths from `from` to `to`, in a fixed depth-first
/// order. Throws PathCapExceeded when more than path_cap paths exist.
std::vector<RunPath> enumerate_full_paths(const FiniteWord& w, StateId from, StateId to,
                                          std::size_t path_cap = kDefaultPathCap);

/// For every q, q' with r(q) > r(q'): some full path q → q' visits all of
/// B(1), ..., B(k).
PropertyReport check_property_1(const FiniteWord& w, const QRanking& f,
                                std::size_t path_cap = kDefaultPathCap);

/// For every q: exactly k full paths q → q, and the i-th (owing h(q)[i])
/// avoids B(h(q)[j]) for j ≤ i, visits B(h(q)[j]) for j > i, avoids
/// G(h(q)[j]) for j < i and visits G(h(q)[i]).
PropertyReport check_property_2(const FiniteWord& w, const QRanking& f,
                                std::size_t path_cap = kDefaultPathCap);

/// Only Q-states have outgoing edges in the first letter and incoming edges
/// in the last letter. Throws std::invalid_argument on the empty word.
PropertyReport check_property_3(const FiniteWord& w);

/// For every q, q' with r(q) < r(q'): no full path q → q' exists.
PropertyReport check_property_4(const FiniteWord& w, const QRanking& f,
                                std::size_t path_cap = kDefaultPathCap);

/// P1..P4 in order.
std::vector<PropertyReport> check_all_properties(const FiniteWord& w, const QRanking& f,
                                                 std::size_t path_cap = kDefaultPathCap);

/// JSON rendering: property id, verdict, witness paths as state-name
/// sequences with levels.
std::string property_reports_to_string(std::span<const PropertyReport> reports);

}  // namespace streett
