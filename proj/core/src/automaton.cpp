#include "streett/automaton.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace streett {

FullStreettAutomaton::FullStreettAutomaton(std::uint32_t n, std::uint32_t pool_k,
                                           std::vector<StreettPair> pairs)
    : n_(n), pool_k_(pool_k), pairs_(std::move(pairs)) {
  if (n_ == 0 || pool_k_ == 0) throw std::invalid_argument("full Streett family needs n >= 1 and k >= 1");
  std::set<std::vector<StateId>> nonempty_bad;
  for (const auto& pair : pairs_) {
    for (const auto& set : {pair.good, pair.bad}) {
      if (!std::is_sorted(set.begin(), set.end())) throw std::invalid_argument("pair sets must be sorted");
      for (StateId s : set) {
        if (!s.valid_for(n_, pool_k_)) throw std::invalid_argument("pair state " + s.name() + " out of range");
      }
    }
    // B restricted to nonempty pairs must be injective.
    if (!pair.bad.empty() && !nonempty_bad.insert(pair.bad).second) {
      throw std::invalid_argument("duplicate nonempty B(i) set");
    }
  }
}

std::vector<StateId> FullStreettAutomaton::states() const {
  std::vector<StateId> out;
  out.reserve(state_count());
  for (std::uint32_t d = 0; d < state_count(); ++d) out.push_back(state_at(d, n_, pool_k_));
  return out;
}

std::vector<StateId> FullStreettAutomaton::initial_states() const {
  std::vector<StateId> out;
  out.reserve(n_);
  for (std::uint32_t i = 0; i < n_; ++i) out.push_back(StateId::q(i));
  return out;
}

FullStreettAutomaton build_full_streett(std::uint32_t n, std::uint32_t k) {
  if (n == 0 || k == 0) throw std::invalid_argument("full Streett family is undefined for n = 0 or k = 0");
  std::vector<StreettPair> pairs;
  pairs.reserve(k);
  for (std::uint32_t i = 1; i <= k; ++i) {
    pairs.push_back(StreettPair{{StateId::g(i)}, {StateId::b(i)}});
  }
  return FullStreettAutomaton(n, k, std::move(pairs));
}

FullStreettAutomaton pad_index(const FullStreettAutomaton& aut, std::uint32_t k_new) {
  if (k_new < aut.index_size()) throw std::invalid_argument("pad_index cannot shrink the index set");
  std::vector<StreettPair> pairs(aut.pairs().begin(), aut.pairs().end());
  pairs.resize(k_new);  // trailing pairs are (∅, ∅)
  return FullStreettAutomaton(aut.n(), aut.pool_k(), std::move(pairs));
}

}  // namespace streett
