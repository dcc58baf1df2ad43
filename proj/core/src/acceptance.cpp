#include "streett/acceptance.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace streett {

namespace {

const Letter& letter_at(const LassoWord& lasso, std::uint32_t position) {
  const std::size_t prefix_len = lasso.prefix().size();
  return position < prefix_len ? lasso.prefix()[position]
                               : lasso.period()[position - prefix_len];
}

std::uint32_t next_pos(const LassoWord& lasso, std::uint32_t position) {
  const std::uint32_t total =
      static_cast<std::uint32_t>(lasso.prefix().size() + lasso.period().size());
  return position + 1 < total ? position + 1 : static_cast<std::uint32_t>(lasso.prefix().size());
}

}  // namespace

ProductGraph::ProductGraph(const FullStreettAutomaton& aut, const LassoWord& lasso)
    : n_(aut.n()),
      k_(aut.pool_k()),
      states_(static_cast<std::uint32_t>(aut.state_count())),
      prefix_len_(static_cast<std::uint32_t>(lasso.prefix().size())),
      period_len_(static_cast<std::uint32_t>(lasso.period().size())) {
  if (lasso.n() != n_ || lasso.k() != k_) {
    throw std::invalid_argument("lasso (n,k) does not match the automaton");
  }
  out_.resize(vertex_count());
  for (std::uint32_t pos = 0; pos < position_count(); ++pos) {
    const std::uint32_t target_pos = next_pos(lasso, pos);
    for (const Edge& e : letter_at(lasso, pos).edges()) {
      out_[vertex_id(e.src, pos)].push_back(vertex_id(e.dst, target_pos));
    }
  }
  for (auto& succ : out_) std::sort(succ.begin(), succ.end());

  for (std::uint32_t i = 0; i < n_; ++i) initial_.push_back(vertex_id(StateId::q(i), 0));

  reachable_.assign(vertex_count(), 0);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t v : initial_) {
    reachable_[v] = 1;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    for (std::uint32_t w : out_[v]) {
      if (!reachable_[w]) {
        reachable_[w] = 1;
        queue.push_back(w);
      }
    }
  }
}

std::uint32_t ProductGraph::vertex_id(StateId state, std::uint32_t position) const {
  return position * states_ + dense_index(state, n_, k_);
}

StateId ProductGraph::vertex_state(std::uint32_t id) const {
  return state_at(id % states_, n_, k_);
}

std::uint32_t ProductGraph::vertex_position(std::uint32_t id) const { return id / states_; }

std::uint32_t ProductGraph::next_position(std::uint32_t position) const {
  return position + 1 < position_count() ? position + 1 : prefix_len_;
}

std::vector<std::uint32_t> ProductGraph::reachable_vertices() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < vertex_count(); ++v) {
    if (reachable_[v]) out.push_back(v);
  }
  return out;
}

ProductGraph build_product(const FullStreettAutomaton& aut, const LassoWord& lasso) {
  return ProductGraph(aut, lasso);
}

namespace {

constexpr std::uint32_t kNone = 0xffffffffu;

/// Iterative Tarjan over the vertices in `verts` (edges leaving the set are
/// ignored). Components come back sorted internally and ordered by their
/// smallest vertex.
std::vector<std::vector<std::uint32_t>> sccs_of(const ProductGraph& g,
                                                const std::vector<std::uint32_t>& verts) {
  std::vector<std::uint32_t> index(g.vertex_count(), kNone);
  std::vector<std::uint32_t> low(g.vertex_count(), 0);
  std::vector<char> on_stack(g.vertex_count(), 0);
  std::vector<char> in_set(g.vertex_count(), 0);
  for (std::uint32_t v : verts) in_set[v] = 1;

  std::vector<std::uint32_t> stack;
  std::vector<std::vector<std::uint32_t>> comps;
  std::uint32_t counter = 0;

  struct Frame {
    std::uint32_t v;
    std::size_t next_child;
  };
  std::vector<Frame> call;

  for (std::uint32_t root : verts) {
    if (index[root] != kNone) continue;
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    call.push_back({root, 0});
    while (!call.empty()) {
      Frame& frame = call.back();
      auto succ = g.successors(frame.v);
      bool descended = false;
      while (frame.next_child < succ.size()) {
        std::uint32_t w = succ[frame.next_child++];
        if (!in_set[w]) continue;
        if (index[w] == kNone) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[frame.v] = std::min(low[frame.v], index[w]);
      }
      if (descended) continue;
      std::uint32_t v = frame.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<std::uint32_t> comp;
        while (true) {
          std::uint32_t w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
          if (w == v) break;
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
    }
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return comps;
}

bool has_internal_edge(const ProductGraph& g, const std::vector<std::uint32_t>& comp) {
  if (comp.size() > 1) return true;  // a nontrivial SCC always has a cycle
  std::uint32_t v = comp.front();
  auto succ = g.successors(v);
  return std::binary_search(succ.begin(), succ.end(), v);
}

std::vector<StateId> projected_states(const ProductGraph& g,
                                      const std::vector<std::uint32_t>& comp) {
  std::vector<StateId> out;
  out.reserve(comp.size());
  for (std::uint32_t v : comp) out.push_back(g.vertex_state(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool intersects(std::span<const StateId> sorted_set, const std::vector<StateId>& sorted_proj) {
  for (StateId s : sorted_set) {
    if (std::binary_search(sorted_proj.begin(), sorted_proj.end(), s)) return true;
  }
  return false;
}

/// BFS path inside `allowed` (empty filter = anywhere) from any source to
/// `target`, inclusive. Deterministic: queue order plus ascending successor
/// order yields a unique shortest path.
std::vector<std::uint32_t> bfs_path(const ProductGraph& g, std::span<const std::uint32_t> sources,
                                    std::uint32_t target, const std::vector<char>* allowed) {
  std::vector<std::uint32_t> parent(g.vertex_count(), kNone);
  std::vector<char> seen(g.vertex_count(), 0);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t s : sources) {
    if (allowed && !(*allowed)[s]) continue;
    if (!seen[s]) {
      seen[s] = 1;
      queue.push_back(s);
    }
  }
  auto unwind = [&](std::uint32_t v) {
    std::vector<std::uint32_t> path{v};
    while (parent[v] != kNone) {
      v = parent[v];
      path.push_back(v);
    }
    std::reverse(path.begin(), path.end());
    return path;
  };
  for (std::uint32_t s : sources) {
    if (s == target) return unwind(s);
  }
  while (!queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    for (std::uint32_t w : g.successors(v)) {
      if (seen[w] || (allowed && !(*allowed)[w])) continue;
      seen[w] = 1;
      parent[w] = v;
      if (w == target) return unwind(w);
      queue.push_back(w);
    }
  }
  throw std::logic_error("bfs_path: target unreachable");
}

AcceptanceVerdict::Witness make_witness(const ProductGraph& g,
                                        const std::vector<std::uint32_t>& comp) {
  AcceptanceVerdict::Witness witness;
  const std::uint32_t anchor = comp.front();

  auto stem_ids = bfs_path(g, g.initial_vertices(), anchor, nullptr);
  witness.stem.start_level = 0;
  for (std::uint32_t v : stem_ids) witness.stem.states.push_back(g.vertex_state(v));

  std::vector<char> in_comp(g.vertex_count(), 0);
  for (std::uint32_t v : comp) in_comp[v] = 1;

  std::vector<std::uint32_t> loop_ids{anchor};
  if (comp.size() == 1) {
    loop_ids.push_back(anchor);  // guaranteed self-loop
  } else {
    std::vector<char> covered(g.vertex_count(), 0);
    covered[anchor] = 1;
    std::uint32_t current = anchor;
    for (std::uint32_t target : comp) {
      if (covered[target]) continue;
      std::uint32_t from[1] = {current};
      auto leg = bfs_path(g, from, target, &in_comp);
      for (std::size_t i = 1; i < leg.size(); ++i) {
        loop_ids.push_back(leg[i]);
        covered[leg[i]] = 1;
      }
      current = target;
    }
    if (current != anchor) {
      std::uint32_t from[1] = {current};
      auto leg = bfs_path(g, from, anchor, &in_comp);
      for (std::size_t i = 1; i < leg.size(); ++i) loop_ids.push_back(leg[i]);
    }
  }
  witness.loop.start_level = g.vertex_position(anchor);
  for (std::uint32_t v : loop_ids) witness.loop.states.push_back(g.vertex_state(v));
  witness.inf_states = projected_states(g, comp);
  return witness;
}

struct PairHits {
  bool good = false;
  bool bad = false;
};

std::vector<PairHits> pair_hits(const FullStreettAutomaton& aut,
                                const std::vector<StateId>& proj) {
  std::vector<PairHits> hits(aut.index_size());
  for (std::uint32_t i = 0; i < aut.index_size(); ++i) {
    hits[i].good = intersects(aut.pairs()[i].good, proj);
    hits[i].bad = intersects(aut.pairs()[i].bad, proj);
  }
  return hits;
}

/// Recursive Streett refinement; returns the first component (in traversal
/// order) whose projection satisfies ⟨G,B⟩_I.
std::optional<std::vector<std::uint32_t>> find_streett_component(
    const FullStreettAutomaton& aut, const ProductGraph& g,
    const std::vector<std::uint32_t>& comp) {
  if (!has_internal_edge(g, comp)) return std::nullopt;
  const auto proj = projected_states(g, comp);
  const auto hits = pair_hits(aut, proj);
  std::vector<std::uint32_t> bad_indices;
  for (std::uint32_t i = 0; i < hits.size(); ++i) {
    if (hits[i].good && !hits[i].bad) bad_indices.push_back(i);
  }
  if (bad_indices.empty()) return comp;

  std::vector<std::uint32_t> remaining;
  remaining.reserve(comp.size());
  for (std::uint32_t v : comp) {
    StateId s = g.vertex_state(v);
    bool drop = false;
    for (std::uint32_t i : bad_indices) {
      const auto& good = aut.pairs()[i].good;
      if (std::binary_search(good.begin(), good.end(), s)) {
        drop = true;
        break;
      }
    }
    if (!drop) remaining.push_back(v);
  }
  for (const auto& sub : sccs_of(g, remaining)) {
    if (auto found = find_streett_component(aut, g, sub)) return found;
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> reachable_sccs(const ProductGraph& product) {
  return sccs_of(product, product.reachable_vertices());
}

std::string_view to_string(AcceptanceCondition condition) {
  return condition == AcceptanceCondition::streett ? "streett" : "rabin";
}

bool streett_satisfied(const FullStreettAutomaton& aut, std::span<const StateId> inf) {
  std::vector<StateId> proj(inf.begin(), inf.end());
  std::sort(proj.begin(), proj.end());
  for (const StreettPair& pair : aut.pairs()) {
    if (intersects(pair.good, proj) && !intersects(pair.bad, proj)) return false;
  }
  return true;
}

bool rabin_satisfied(const FullStreettAutomaton& aut, std::span<const StateId> inf) {
  std::vector<StateId> proj(inf.begin(), inf.end());
  std::sort(proj.begin(), proj.end());
  for (const StreettPair& pair : aut.pairs()) {
    if (intersects(pair.good, proj) && !intersects(pair.bad, proj)) return true;
  }
  return false;
}

AcceptanceVerdict streett_accepts(const FullStreettAutomaton& aut, const LassoWord& lasso) {
  ProductGraph g(aut, lasso);
  AcceptanceVerdict verdict;
  for (const auto& comp : reachable_sccs(g)) {
    if (auto found = find_streett_component(aut, g, comp)) {
      verdict.accepted = true;
      verdict.witness = make_witness(g, *found);
      return verdict;
    }
  }
  return verdict;
}

AcceptanceVerdict rabin_accepts(const FullStreettAutomaton& aut, const LassoWord& lasso) {
  ProductGraph g(aut, lasso);
  AcceptanceVerdict verdict;
  const auto reachable = g.reachable_vertices();
  for (std::uint32_t i = 0; i < aut.index_size(); ++i) {
    const StreettPair& pair = aut.pairs()[i];
    if (pair.good.empty()) continue;
    std::vector<std::uint32_t> allowed;
    allowed.reserve(reachable.size());
    for (std::uint32_t v : reachable) {
      StateId s = g.vertex_state(v);
      if (!std::binary_search(pair.bad.begin(), pair.bad.end(), s)) allowed.push_back(v);
    }
    for (const auto& comp : sccs_of(g, allowed)) {
      if (!has_internal_edge(g, comp)) continue;
      const auto proj = projected_states(g, comp);
      if (!intersects(pair.good, proj)) continue;
      verdict.accepted = true;
      verdict.witness = make_witness(g, comp);
      return verdict;
    }
  }
  return verdict;
}

bool witness_replays(const FullStreettAutomaton& aut, const LassoWord& lasso,
                     const AcceptanceVerdict::Witness& witness, AcceptanceCondition condition) {
  if (witness.stem.states.empty() || witness.loop.states.size() < 2) return false;
  if (witness.stem.start_level != 0) return false;
  if (witness.stem.states.front().role != StateRole::q) return false;

  std::uint32_t pos = 0;
  for (std::size_t i = 0; i + 1 < witness.stem.states.size(); ++i) {
    if (!letter_at(lasso, pos).has_edge(witness.stem.states[i], witness.stem.states[i + 1])) {
      return false;
    }
    pos = next_pos(lasso, pos);
  }
  if (witness.loop.start_level != pos) return false;
  if (witness.loop.states.front() != witness.stem.states.back()) return false;

  std::uint32_t loop_pos = pos;
  for (std::size_t i = 0; i + 1 < witness.loop.states.size(); ++i) {
    if (!letter_at(lasso, loop_pos).has_edge(witness.loop.states[i], witness.loop.states[i + 1])) {
      return false;
    }
    loop_pos = next_pos(lasso, loop_pos);
  }
  if (loop_pos != pos || witness.loop.states.back() != witness.loop.states.front()) return false;

  std::vector<StateId> inf(witness.loop.states.begin(), witness.loop.states.end());
  std::sort(inf.begin(), inf.end());
  inf.erase(std::unique(inf.begin(), inf.end()), inf.end());
  if (inf != witness.inf_states) return false;

  return condition == AcceptanceCondition::streett ? streett_satisfied(aut, inf)
                                                   : rabin_satisfied(aut, inf);
}

namespace {

nlohmann::ordered_json run_path_json(const RunPath& path) {
  nlohmann::ordered_json j;
  j["start_position"] = path.start_level;
  auto& states = j["states"] = nlohmann::ordered_json::array();
  for (StateId s : path.states) states.push_back(s.name());
  return j;
}

}  // namespace

std::string verdict_to_string(const AcceptanceVerdict& verdict, AcceptanceCondition condition) {
  nlohmann::ordered_json j;
  j["condition"] = std::string(to_string(condition));
  j["accepted"] = verdict.accepted;
  if (verdict.witness) {
    nlohmann::ordered_json w;
    w["stem"] = run_path_json(verdict.witness->stem);
    w["loop"] = run_path_json(verdict.witness->loop);
    auto& inf = w["inf_states"] = nlohmann::ordered_json::array();
    for (StateId s : verdict.witness->inf_states) inf.push_back(s.name());
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j.dump(2) + "\n";
}

}  // namespace streett
