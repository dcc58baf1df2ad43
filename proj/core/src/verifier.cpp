#include "streett/verifier.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace streett {

namespace {

/// Dense per-level adjacency of a word's run graph.
struct WordGraph {
  std::uint32_t n;
  std::uint32_t k;
  std::uint32_t states;
  // out[level][src] = sorted dense successors
  std::vector<std::vector<std::vector<std::uint32_t>>> out;

  explicit WordGraph(const FiniteWord& w)
      : n(w.n()), k(w.k()), states(static_cast<std::uint32_t>(state_count(w.n(), w.k()))) {
    out.resize(w.size());
    for (std::size_t level = 0; level < w.size(); ++level) {
      out[level].resize(states);
      for (const Edge& e : w[level].edges()) {
        out[level][dense_index(e.src, n, k)].push_back(dense_index(e.dst, n, k));
      }
    }
  }
};

void dfs_paths(const WordGraph& g, std::size_t level, std::uint32_t current, std::uint32_t target,
               std::vector<StateId>& stack, std::vector<RunPath>& found, std::size_t cap) {
  if (level == g.out.size()) {
    if (current == target) {
      if (found.size() >= cap) {
        throw PathCapExceeded("full-path enumeration exceeded the cap of " + std::to_string(cap));
      }
      found.push_back(RunPath{stack, 0});
    }
    return;
  }
  for (std::uint32_t next : g.out[level][current]) {
    stack.push_back(state_at(next, g.n, g.k));
    dfs_paths(g, level + 1, next, target, stack, found, cap);
    stack.pop_back();
  }
}

std::vector<RunPath> full_paths(const WordGraph& g, const FiniteWord& w, StateId from, StateId to,
                                std::size_t cap) {
  if (!from.valid_for(w.n(), w.k()) || !to.valid_for(w.n(), w.k())) {
    throw std::invalid_argument("enumerate_full_paths: state outside the (n,k) state set");
  }
  std::vector<RunPath> found;
  std::vector<StateId> stack{from};
  dfs_paths(g, 0, dense_index(from, w.n(), w.k()), dense_index(to, w.n(), w.k()), stack, found,
            cap);
  return found;
}

void require_matching(const FiniteWord& w, const QRanking& f) {
  if (f.n() != w.n() || f.k() != w.k()) {
    throw std::invalid_argument("word and ranking dimensions differ");
  }
}

std::string path_text(const RunPath& p) {
  std::string out;
  for (std::size_t i = 0; i < p.states.size(); ++i) {
    if (i > 0) out += "->";
    out += p.states[i].name();
  }
  return out;
}

}  // namespace

PathVisitProfile profile_of(RunPath path) {
  PathVisitProfile profile;
  for (StateId s : path.states) {
    if (s.role == StateRole::g) profile.visited_good.push_back(s.index);
    if (s.role == StateRole::b) profile.visited_bad.push_back(s.index);
  }
  auto dedup = [](std::vector<std::uint32_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedup(profile.visited_good);
  dedup(profile.visited_bad);
  profile.path = std::move(path);
  return profile;
}

std::string_view to_string(QWordProperty property) {
  switch (property) {
    case QWordProperty::p1: return "P1";
    case QWordProperty::p2: return "P2";
    case QWordProperty::p3: return "P3";
    case QWordProperty::p4: return "P4";
  }
  return "?";
}

std::vector<RunPath> enumerate_full_paths(const FiniteWord& w, StateId from, StateId to,
                                          std::size_t path_cap) {
  WordGraph g(w);
  return full_paths(g, w, from, to, path_cap);
}

PropertyReport check_property_1(const FiniteWord& w, const QRanking& f, std::size_t path_cap) {
  require_matching(w, f);
  PropertyReport rep;
  rep.property = QWordProperty::p1;
  rep.holds = true;
  WordGraph g(w);
  const std::uint32_t k = w.k();
  for (std::uint32_t q = 0; q < w.n(); ++q) {
    for (std::uint32_t q2 = 0; q2 < w.n(); ++q2) {
      if (f.rank_of(q) <= f.rank_of(q2)) continue;
      auto paths = full_paths(g, w, StateId::q(q), StateId::q(q2), path_cap);
      bool witnessed = false;
      for (RunPath& p : paths) {
        PathVisitProfile profile = profile_of(std::move(p));
        if (profile.visited_bad.size() == k) {
          rep.witnesses.push_back(std::move(profile));
          witnessed = true;
          break;
        }
      }
      if (!witnessed) {
        rep.holds = false;
        rep.detail = "no full path q" + std::to_string(q) + "->q" + std::to_string(q2) +
                     " visits all of B(1..k)";
        if (!paths.empty()) rep.counterexample = profile_of(std::move(paths.front()));
        return rep;
      }
    }
  }
  return rep;
}

PropertyReport check_property_2(const FiniteWord& w, const QRanking& f, std::size_t path_cap) {
  require_matching(w, f);
  PropertyReport rep;
  rep.property = QWordProperty::p2;
  rep.holds = true;
  WordGraph g(w);
  const std::uint32_t k = w.k();
  for (std::uint32_t q = 0; q < w.n(); ++q) {
    auto order = f.index_order(q);  // h(q), 1-based values
    auto paths = full_paths(g, w, StateId::q(q), StateId::q(q), path_cap);
    if (paths.size() != k) {
      rep.holds = false;
      rep.detail = "state q" + std::to_string(q) + ": " + std::to_string(paths.size()) +
                   " full paths back to itself, expected exactly " + std::to_string(k);
      if (!paths.empty()) rep.counterexample = profile_of(std::move(paths.front()));
      return rep;
    }
    // Identify each path by the one obligation it owes, then check the full
    // visit pattern for that position in h(q).
    std::vector<PathVisitProfile> by_position(k);
    std::vector<bool> claimed(k, false);
    for (RunPath& p : paths) {
      PathVisitProfile profile = profile_of(std::move(p));
      std::vector<std::uint32_t> owed;
      std::set_difference(profile.visited_good.begin(), profile.visited_good.end(),
                          profile.visited_bad.begin(), profile.visited_bad.end(),
                          std::back_inserter(owed));
      auto fail = [&](const std::string& why) {
        rep.holds = false;
        rep.detail = "state q" + std::to_string(q) + ", path " + path_text(profile.path) + ": " + why;
        rep.counterexample = std::move(profile);
      };
      if (owed.size() != 1) {
        fail("owes " + std::to_string(owed.size()) + " obligations, expected exactly 1");
        return rep;
      }
      auto it = std::find(order.begin(), order.end(), owed.front());
      std::size_t pos = static_cast<std::size_t>(it - order.begin());  // 0-based i-1
      if (claimed[pos]) {
        fail("owes obligation " + std::to_string(owed.front()) + " already owed by another path");
        return rep;
      }
      bool pattern_ok = true;
      for (std::size_t j = 0; j < k && pattern_ok; ++j) {
        bool in_bad = std::binary_search(profile.visited_bad.begin(), profile.visited_bad.end(),
                                         order[j]);
        bool in_good = std::binary_search(profile.visited_good.begin(), profile.visited_good.end(),
                                          order[j]);
        if (j <= pos && in_bad) pattern_ok = false;
        if (j > pos && !in_bad) pattern_ok = false;
        if (j < pos && in_good) pattern_ok = false;
        if (j == pos && !in_good) pattern_ok = false;
      }
      if (!pattern_ok) {
        fail("visit pattern does not match owed obligation h(q)[" + std::to_string(pos + 1) + "]");
        return rep;
      }
      claimed[pos] = true;
      by_position[pos] = std::move(profile);
    }
    for (auto& profile : by_position) rep.witnesses.push_back(std::move(profile));
  }
  return rep;
}

PropertyReport check_property_3(const FiniteWord& w) {
  if (w.empty()) throw std::invalid_argument("property 3 is undefined on the empty word");
  PropertyReport rep;
  rep.property = QWordProperty::p3;
  rep.holds = true;
  for (const Edge& e : w[0].edges()) {
    if (e.src.role != StateRole::q) {
      rep.holds = false;
      rep.detail = "non-Q state " + e.src.name() + " has an outgoing edge at the first level";
      rep.counterexample = profile_of(RunPath{{e.src, e.dst}, 0});
      return rep;
    }
  }
  for (const Edge& e : w[w.size() - 1].edges()) {
    if (e.dst.role != StateRole::q) {
      rep.holds = false;
      rep.detail = "non-Q state " + e.dst.name() + " has an incoming edge at the last level";
      rep.counterexample = profile_of(RunPath{{e.src, e.dst}, w.size() - 1});
      return rep;
    }
  }
  return rep;
}

PropertyReport check_property_4(const FiniteWord& w, const QRanking& f, std::size_t path_cap) {
  require_matching(w, f);
  PropertyReport rep;
  rep.property = QWordProperty::p4;
  rep.holds = true;
  WordGraph g(w);
  for (std::uint32_t q = 0; q < w.n(); ++q) {
    for (std::uint32_t q2 = 0; q2 < w.n(); ++q2) {
      if (f.rank_of(q) >= f.rank_of(q2)) continue;
      auto paths = full_paths(g, w, StateId::q(q), StateId::q(q2), path_cap);
      if (!paths.empty()) {
        rep.holds = false;
        rep.detail = "full path q" + std::to_string(q) + "->q" + std::to_string(q2) +
                     " exists although r(q" + std::to_string(q) + ") < r(q" + std::to_string(q2) + ")";
        rep.counterexample = profile_of(std::move(paths.front()));
        return rep;
      }
    }
  }
  return rep;
}

std::vector<PropertyReport> check_all_properties(const FiniteWord& w, const QRanking& f,
                                                 std::size_t path_cap) {
  std::vector<PropertyReport> out;
  out.push_back(check_property_1(w, f, path_cap));
  out.push_back(check_property_2(w, f, path_cap));
  out.push_back(check_property_3(w));
  out.push_back(check_property_4(w, f, path_cap));
  return out;
}

namespace {

nlohmann::ordered_json profile_json(const PathVisitProfile& profile) {
  nlohmann::ordered_json j;
  j["start_level"] = profile.path.start_level;
  auto& states = j["states"] = nlohmann::ordered_json::array();
  for (StateId s : profile.path.states) states.push_back(s.name());
  j["visited_good"] = profile.visited_good;
  j["visited_bad"] = profile.visited_bad;
  return j;
}

}  // namespace

std::string property_reports_to_string(std::span<const PropertyReport> reports) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const PropertyReport& rep : reports) {
    nlohmann::ordered_json j;
    j["property"] = std::string(to_string(rep.property));
    j["holds"] = rep.holds;
    auto& witnesses = j["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& profile : rep.witnesses) witnesses.push_back(profile_json(profile));
    j["counterexample"] =
        rep.counterexample ? profile_json(*rep.counterexample) : nlohmann::ordered_json(nullptr);
    j["detail"] = rep.detail;
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

}  // namespace streett
