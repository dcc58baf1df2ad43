#pragma once

#include <string>

#include "streett/word.hpp"

namespace streett {

/// Graphviz rendering of a run graph: one rank=same subgraph (column) per
/// level, every ⟨state, level⟩ as a pinned node named "<state>_<level>", rows
/// ordered g_k..g_1, b_k..b_1, q_0..q_(n-1), t from top to bottom. Only the
/// word's edges are emitted, so node and edge counts match the run graph.
std::string to_dot(const FiniteWord& w);

}  // namespace streett
