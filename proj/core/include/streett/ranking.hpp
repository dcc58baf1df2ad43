#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace streett {

using BigInt = boost::multiprecision::cpp_int;

/// r(q_i) stored at [i]; a bijection onto [1..n].
using NumericRanking = std::vector<std::uint32_t>;
/// h(q_i) stored at [i]; each entry a permutation of [1..k].
using IndexRanking = std::vector<std::vector<std::uint32_t>>;

bool is_numeric_ranking(const NumericRanking& r, std::uint32_t n);
bool is_index_ranking(const IndexRanking& h, std::uint32_t n, std::uint32_t k);

/// A Q-ranking ⟨r, h⟩: bijective numeric rank on Q plus, per state, a
/// permutation of the index set [1..k]. Immutable.
class QRanking {
 public:
  QRanking(NumericRanking r, IndexRanking h);

  std::uint32_t n() const { return static_cast<std::uint32_t>(r_.size()); }
  std::uint32_t k() const { return static_cast<std::uint32_t>(h_.front().size()); }
  std::uint32_t rank_of(std::uint32_t q_index) const { return r_[q_index]; }
  std::span<const std::uint32_t> index_order(std::uint32_t q_index) const { return h_[q_index]; }
  const NumericRanking& numeric() const { return r_; }
  const IndexRanking& index() const { return h_; }

  /// "r=[2,1,3];h=[[1,2],[1,2],[2,1]]" with arrays indexed by q0..q(n-1).
  std::string to_string() const;
  static QRanking parse(std::string_view text);

  /// FNV-1a of the serialization, as 16 hex digits; used in filenames.
  std::string hash() const;

  friend bool operator==(const QRanking&, const QRanking&) = default;

 private:
  NumericRanking r_;
  IndexRanking h_;
};

/// Lazy enumeration of every Q-ranking exactly once, in a fixed order:
/// lexicographic on (r(q0), ..., r(q(n-1))), then on (h(q0), ..., h(q(n-1)))
/// with each h(q) in lexicographic order. Single consumer; independent
/// enumerators may run concurrently.
class QRankingEnumerator {
 public:
  QRankingEnumerator(std::uint32_t n, std::uint32_t k);

  std::optional<QRanking> next();

 private:
  std::uint32_t n_;
  std::uint32_t k_;
  NumericRanking r_;
  IndexRanking h_;
  bool done_ = false;
};

/// Materializes at most `limit` rankings in enumeration order.
std::vector<QRanking> enumerate_q_rankings(std::uint32_t n, std::uint32_t k,
                                           std::size_t limit = SIZE_MAX);

BigInt factorial(std::uint32_t n);

/// Exact count n!·(k!)^n.
BigInt count_q_rankings(std::uint32_t n, std::uint32_t k);

enum class BoundRegime { k_big_o_of_n, k_omega_of_n };
std::string_view to_string(BoundRegime regime);

/// Arithmetic consequence of the fooling-set construction for a
/// complementation instance with n states and index size k: an embedded
/// (n0, k0) family with n = 2·k0 + n0 + 1 forces ranking_count states.
struct BoundReport {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t n0 = 0;
  std::uint32_t k0 = 0;
  BigInt ranking_count;  // n0!·(k0!)^{n0}
  BoundRegime regime = BoundRegime::k_big_o_of_n;

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

/// When 3k ≤ n − 2 the whole index budget fits (k0 = k); otherwise k0 and n0
/// are balanced via k0 = ⌊(n−1)/3⌋. In both regimes n0 = n − 2·k0 − 1.
/// Throws std::invalid_argument when n < 4 or k < 1.
BoundReport lower_bound_report(std::uint32_t n, std::uint32_t k);

}  // namespace streett
