#pragma once

// Seeded generators for property-style tests. Everything is driven by an
// explicit mt19937_64 so failures reproduce from the seed alone.

#include <random>

#include "streett/word.hpp"

namespace streett::testing {

inline Letter random_letter(std::uint32_t n, std::uint32_t k, std::mt19937_64& rng,
                            double edge_probability) {
  std::bernoulli_distribution flip(edge_probability);
  std::vector<Edge> edges;
  const std::uint32_t states = static_cast<std::uint32_t>(state_count(n, k));
  for (std::uint32_t i = 0; i < states; ++i) {
    for (std::uint32_t j = 0; j < states; ++j) {
      if (flip(rng)) edges.push_back(Edge{state_at(i, n, k), state_at(j, n, k)});
    }
  }
  return Letter(n, k, std::move(edges));
}

inline FiniteWord random_word(std::uint32_t n, std::uint32_t k, std::size_t length,
                              std::mt19937_64& rng, double edge_probability) {
  FiniteWord w(n, k);
  for (std::size_t i = 0; i < length; ++i) w.push_back(random_letter(n, k, rng, edge_probability));
  return w;
}

inline LassoWord random_lasso(std::uint32_t n, std::uint32_t k, std::size_t prefix_length,
                              std::size_t period_length, std::mt19937_64& rng,
                              double edge_probability) {
  return LassoWord(random_word(n, k, prefix_length, rng, edge_probability),
                   random_word(n, k, period_length, rng, edge_probability));
}

}  // namespace streett::testing
