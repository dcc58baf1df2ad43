#include "streett/ranking.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "streett/word_io.hpp"

namespace streett {

bool is_numeric_ranking(const NumericRanking& r, std::uint32_t n) {
  if (r.size() != n || n == 0) return false;
  std::vector<bool> seen(n + 1, false);
  for (std::uint32_t v : r) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool is_index_ranking(const IndexRanking& h, std::uint32_t n, std::uint32_t k) {
  if (h.size() != n || n == 0 || k == 0) return false;
  for (const auto& perm : h) {
    if (perm.size() != k) return false;
    std::vector<bool> seen(k + 1, false);
    for (std::uint32_t v : perm) {
      if (v < 1 || v > k || seen[v]) return false;
      seen[v] = true;
    }
  }
  return true;
}

QRanking::QRanking(NumericRanking r, IndexRanking h) : r_(std::move(r)), h_(std::move(h)) {
  if (!is_numeric_ranking(r_, static_cast<std::uint32_t>(r_.size()))) {
    throw std::invalid_argument("numeric ranking must be a bijection Q -> [1..n]");
  }
  if (h_.empty() || !is_index_ranking(h_, static_cast<std::uint32_t>(r_.size()),
                                      static_cast<std::uint32_t>(h_.front().size()))) {
    throw std::invalid_argument("index ranking must give every q a permutation of [1..k]");
  }
}

namespace {

void append_array(std::string& out, std::span<const std::uint32_t> values) {
  out += '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  out += ']';
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError("ranking: expected '" + std::string(1, c) + "' at offset " +
                       std::to_string(pos_));
    }
    ++pos_;
  }

  void expect(std::string_view s) {
    for (char c : s) expect(c);
  }

  std::uint32_t number() {
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{} || ptr == text_.data() + pos_) {
      throw ParseError("ranking: expected a number at offset " + std::to_string(pos_));
    }
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  std::vector<std::uint32_t> array() {
    std::vector<std::uint32_t> out;
    expect('[');
    if (!at(']')) {
      out.push_back(number());
      while (at(',')) {
        ++pos_;
        out.push_back(number());
      }
    }
    expect(']');
    return out;
  }

  bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  bool at_end() const { return pos_ == text_.size(); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string QRanking::to_string() const {
  std::string out = "r=";
  append_array(out, r_);
  out += ";h=[";
  for (std::size_t i = 0; i < h_.size(); ++i) {
    if (i > 0) out += ',';
    append_array(out, h_[i]);
  }
  out += ']';
  return out;
}

QRanking QRanking::parse(std::string_view text) {
  Cursor cur(text);
  cur.expect("r=");
  NumericRanking r = cur.array();
  cur.expect(";h=[");
  IndexRanking h;
  if (!cur.at(']')) {
    h.push_back(cur.array());
    while (cur.at(',')) {
      cur.expect(',');
      h.push_back(cur.array());
    }
  }
  cur.expect(']');
  if (!cur.at_end()) throw ParseError("ranking: trailing characters");
  try {
    return QRanking(std::move(r), std::move(h));
  } catch (const std::invalid_argument& err) {
    throw ParseError(std::string("ranking: ") + err.what());
  }
}

std::string QRanking::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : to_string()) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

QRankingEnumerator::QRankingEnumerator(std::uint32_t n, std::uint32_t k) : n_(n), k_(k) {
  if (n == 0 || k == 0) throw std::invalid_argument("enumeration needs n >= 1 and k >= 1");
  r_.resize(n);
  std::iota(r_.begin(), r_.end(), 1u);
  h_.assign(n, std::vector<std::uint32_t>(k));
  for (auto& perm : h_) std::iota(perm.begin(), perm.end(), 1u);
}

std::optional<QRanking> QRankingEnumerator::next() {
  if (done_) return std::nullopt;
  QRanking current(r_, h_);
  // Advance the odometer: h(q(n-1)) fastest, then carry leftwards, then r.
  std::size_t i = n_;
  while (i > 0) {
    if (std::next_permutation(h_[i - 1].begin(), h_[i - 1].end())) break;
    --i;
  }
  if (i == 0 && !std::next_permutation(r_.begin(), r_.end())) done_ = true;
  return current;
}

std::vector<QRanking> enumerate_q_rankings(std::uint32_t n, std::uint32_t k, std::size_t limit) {
  std::vector<QRanking> out;
  QRankingEnumerator en(n, k);
  while (out.size() < limit) {
    auto f = en.next();
    if (!f) break;
    out.push_back(std::move(*f));
  }
  return out;
}

BigInt factorial(std::uint32_t n) {
  BigInt out = 1;
  for (std::uint32_t i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt count_q_rankings(std::uint32_t n, std::uint32_t k) {
  if (n == 0 || k == 0) throw std::invalid_argument("count needs n >= 1 and k >= 1");
  return factorial(n) * boost::multiprecision::pow(factorial(k), n);
}

std::string_view to_string(BoundRegime regime) {
  return regime == BoundRegime::k_big_o_of_n ? "k_O_of_n" : "k_omega_of_n";
}

BoundReport lower_bound_report(std::uint32_t n, std::uint32_t k) {
  if (k < 1) throw std::invalid_argument("lower_bound_report needs k >= 1");
  if (n < 4) {
    throw std::invalid_argument("lower_bound_report needs n >= 4 to fit n0 >= 1 and k0 >= 1");
  }
  BoundReport rep;
  rep.n = n;
  rep.k = k;
  if (3 * std::uint64_t{k} + 2 <= n) {
    rep.regime = BoundRegime::k_big_o_of_n;
    rep.k0 = k;
  } else {
    rep.regime = BoundRegime::k_omega_of_n;
    rep.k0 = (n - 1) / 3;
  }
  rep.n0 = n - 2 * rep.k0 - 1;
  rep.ranking_count = count_q_rankings(rep.n0, rep.k0);
  return rep;
}

}  // namespace streett
