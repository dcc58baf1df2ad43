#include "streett/dot.hpp"

namespace streett {

namespace {

std::uint32_t row_of(StateId s, std::uint32_t n, std::uint32_t k) {
  switch (s.role) {
    case StateRole::g:
      return k - s.index;
    case StateRole::b:
      return 2 * k - s.index;
    case StateRole::q:
      return 2 * k + s.index;
    case StateRole::t:
      return 2 * k + n;
  }
  return 0;
}

}  // namespace

std::string to_dot(const FiniteWord& w) {
  const std::uint32_t n = w.n();
  const std::uint32_t k = w.k();
  const std::uint32_t rows = static_cast<std::uint32_t>(state_count(n, k));

  // Row order of Figure-style layouts: g rows, then b rows, then q rows, t last.
  std::vector<StateId> by_row(rows, StateId::t());
  for (std::uint32_t d = 0; d < rows; ++d) {
    StateId s = state_at(d, n, k);
    by_row[row_of(s, n, k)] = s;
  }

  std::string out;
  out += "digraph run_graph {\n";
  out += "  rankdir=LR;\n";
  out += "  node [shape=point, width=0.12];\n";
  for (std::size_t level = 0; level <= w.size(); ++level) {
    out += "  subgraph level_" + std::to_string(level) + " {\n";
    out += "    rank=same;\n";
    for (std::uint32_t row = 0; row < rows; ++row) {
      StateId s = by_row[row];
      out += "    \"" + s.name() + "_" + std::to_string(level) + "\" [xlabel=\"" + s.name() +
             "\", pos=\"" + std::to_string(level) + "," + std::to_string(rows - 1 - row) +
             "!\"];\n";
    }
    out += "  }\n";
  }
  for (std::size_t level = 0; level < w.size(); ++level) {
    for (const Edge& e : w[level].edges()) {
      out += "  \"" + e.src.name() + "_" + std::to_string(level) + "\" -> \"" + e.dst.name() +
             "_" + std::to_string(level + 1) + "\";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace streett
