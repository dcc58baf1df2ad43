#include "streett/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "streett/acceptance.hpp"
#include "streett/qword.hpp"
#include "streett/version.hpp"
#include "streett/word_io.hpp"

namespace streett {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ms(Clock::time_point from) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - from).count());
}

void parallel_for(std::size_t count, std::uint32_t requested_threads,
                  const std::function<void(std::size_t)>& fn) {
  std::uint32_t threads = requested_threads != 0 ? requested_threads
                                                 : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<std::uint32_t>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::uint32_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

void validate(const CampaignConfig& cfg) {
  if (cfg.n == 0 || cfg.k == 0) throw std::invalid_argument("campaign needs n >= 1 and k >= 1");
  if (cfg.exponents.empty()) throw std::invalid_argument("campaign needs at least one exponent pair");
  for (const ExponentPair& e : cfg.exponents) {
    if (e.a < 1 || e.b < 1) {
      throw std::invalid_argument("exponents must be >= 1 so both words recur forever");
    }
  }
}

QRanking random_ranking(std::uint32_t n, std::uint32_t k, std::mt19937_64& rng) {
  NumericRanking r(n);
  std::iota(r.begin(), r.end(), 1u);
  std::shuffle(r.begin(), r.end(), rng);
  IndexRanking h(n, std::vector<std::uint32_t>(k));
  for (auto& perm : h) {
    std::iota(perm.begin(), perm.end(), 1u);
    std::shuffle(perm.begin(), perm.end(), rng);
  }
  return QRanking(std::move(r), std::move(h));
}

std::string bound_statement(std::uint32_t n, std::uint32_t k, const BigInt& count) {
  std::ostringstream out;
  out << "Every union-closed automaton recognizing the complement of the (" << n << "," << k
      << ") full Streett instance needs at least " << count
      << " states; the campaign checks the fooling-set conditions behind that bound on finite "
         "exponent patterns, which supports the claim at desk scale but is not a proof of the "
         "infinite inclusion.";
  return out.str();
}

}  // namespace

std::string_view to_string(PairPolicy policy) {
  return policy == PairPolicy::all_pairs ? "all_pairs" : "sample";
}

bool all_verdicts_pass(const CampaignReport& report) {
  for (const RankingVerdict& v : report.rankings) {
    if (!v.pass()) return false;
  }
  for (const PairVerdict& v : report.pairs) {
    if (!v.pass()) return false;
  }
  return true;
}

CampaignReport run_campaign(const CampaignConfig& config) {
  validate(config);
  const auto started = Clock::now();

  CampaignConfig cfg = config;
  if (cfg.pair_policy == PairPolicy::all_pairs) {
    cfg.sample_count = 0;
    cfg.seed = 0;
  }

  const FullStreettAutomaton aut = build_full_streett(cfg.n, cfg.k);
  const BigInt total_count = count_q_rankings(cfg.n, cfg.k);

  // Which rankings take part, and which ordered pairs get mixed-period checks.
  std::vector<QRanking> rankings;
  std::vector<std::pair<std::size_t, std::size_t>> pair_indices;
  if (cfg.pair_policy == PairPolicy::all_pairs) {
    if (total_count > cfg.enumeration_budget) {
      std::ostringstream msg;
      msg << "all_pairs campaign over " << total_count << " rankings exceeds the budget of "
          << cfg.enumeration_budget;
      throw BudgetExceeded(msg.str());
    }
    rankings = enumerate_q_rankings(cfg.n, cfg.k);
    for (std::size_t i = 0; i < rankings.size(); ++i) {
      for (std::size_t j = 0; j < rankings.size(); ++j) {
        if (i != j) pair_indices.emplace_back(i, j);
      }
    }
  } else {
    std::mt19937_64 rng(cfg.seed);
    std::vector<std::string> keys;
    auto intern = [&](QRanking f) {
      std::string key = f.to_string();
      for (std::size_t i = 0; i < keys.size(); ++i) {
        if (keys[i] == key) return i;
      }
      keys.push_back(std::move(key));
      rankings.push_back(std::move(f));
      return rankings.size() - 1;
    };
    for (std::uint32_t s = 0; s < cfg.sample_count; ++s) {
      QRanking f = random_ranking(cfg.n, cfg.k, rng);
      QRanking f2 = random_ranking(cfg.n, cfg.k, rng);
      while (f2 == f) f2 = random_ranking(cfg.n, cfg.k, rng);
      pair_indices.emplace_back(intern(std::move(f)), intern(std::move(f2)));
    }
  }

  // Build every witness word once.
  std::vector<FiniteWord> words;
  words.reserve(rankings.size());
  for (const QRanking& f : rankings) words.push_back(build_q_word(aut, f).word);

  CampaignReport report;
  report.tool = kToolName;
  report.version = kVersion;
  report.config = cfg;
  report.ranking_count = total_count.str();

  const auto structural_started = Clock::now();
  report.rankings.resize(rankings.size());
  parallel_for(rankings.size(), cfg.threads, [&](std::size_t i) {
    RankingVerdict v;
    v.ranking = rankings[i].to_string();
    const auto property_reports = check_all_properties(words[i], rankings[i], cfg.path_cap);
    v.p1 = property_reports[0].holds;
    v.p2 = property_reports[1].holds;
    v.p3 = property_reports[2].holds;
    v.p4 = property_reports[3].holds;
    LassoWord lasso(FiniteWord(cfg.n, cfg.k), words[i]);
    v.streett_rejected = !streett_accepts(aut, lasso).accepted;
    AcceptanceVerdict rabin = rabin_accepts(aut, lasso);
    v.rabin_accepted = rabin.accepted && rabin.witness &&
                       witness_replays(aut, lasso, *rabin.witness, AcceptanceCondition::rabin);
    report.rankings[i] = std::move(v);
  });
  report.structural_ms = elapsed_ms(structural_started);

  const auto pairs_started = Clock::now();
  const std::size_t per_pair = cfg.exponents.size();
  report.pairs.resize(pair_indices.size() * per_pair);
  parallel_for(report.pairs.size(), cfg.threads, [&](std::size_t task) {
    const auto [i, j] = pair_indices[task / per_pair];
    const ExponentPair exp = cfg.exponents[task % per_pair];
    PairVerdict v;
    v.f = rankings[i].to_string();
    v.f_prime = rankings[j].to_string();
    v.a = exp.a;
    v.b = exp.b;
    LassoWord lasso(FiniteWord(cfg.n, cfg.k),
                    concat(repeat(words[i], exp.a), repeat(words[j], exp.b)));
    AcceptanceVerdict verdict = streett_accepts(aut, lasso);
    v.accepted = verdict.accepted;
    v.witness_valid = verdict.witness &&
                      witness_replays(aut, lasso, *verdict.witness, AcceptanceCondition::streett);
    report.pairs[task] = std::move(v);
  });
  report.pairs_ms = elapsed_ms(pairs_started);

  report.lower_bound_states = report.ranking_count;
  report.lower_bound_statement = bound_statement(cfg.n, cfg.k, total_count);
  report.overall_pass = all_verdicts_pass(report);
  report.wall_ms = elapsed_ms(started);
  return report;
}

namespace {

nlohmann::ordered_json config_json(const CampaignConfig& cfg) {
  nlohmann::ordered_json j;
  j["n"] = cfg.n;
  j["k"] = cfg.k;
  j["pair_policy"] = std::string(to_string(cfg.pair_policy));
  if (cfg.pair_policy == PairPolicy::sample) {
    j["sample_count"] = cfg.sample_count;
    j["seed"] = cfg.seed;
  }
  auto& exps = j["exponents"] = nlohmann::ordered_json::array();
  for (const ExponentPair& e : cfg.exponents) exps.push_back({e.a, e.b});
  j["path_cap"] = cfg.path_cap;
  j["enumeration_budget"] = cfg.enumeration_budget;
  j["threads"] = cfg.threads;
  return j;
}

CampaignConfig config_from_json(const nlohmann::json& j) {
  CampaignConfig cfg;
  cfg.n = j.at("n").get<std::uint32_t>();
  cfg.k = j.at("k").get<std::uint32_t>();
  const std::string policy = j.at("pair_policy").get<std::string>();
  if (policy == "all_pairs") {
    cfg.pair_policy = PairPolicy::all_pairs;
  } else if (policy == "sample") {
    cfg.pair_policy = PairPolicy::sample;
    cfg.sample_count = j.at("sample_count").get<std::uint32_t>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
  } else {
    throw ParseError("report: unknown pair policy '" + policy + "'");
  }
  cfg.exponents.clear();
  for (const auto& e : j.at("exponents")) {
    cfg.exponents.push_back(ExponentPair{e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>()});
  }
  cfg.path_cap = j.at("path_cap").get<std::size_t>();
  cfg.enumeration_budget = j.at("enumeration_budget").get<std::uint64_t>();
  cfg.threads = j.at("threads").get<std::uint32_t>();
  return cfg;
}

}  // namespace

std::string report_to_string(const CampaignReport& report) {
  nlohmann::ordered_json j;
  j["tool"] = report.tool;
  j["version"] = report.version;
  j["config"] = config_json(report.config);
  j["ranking_count"] = report.ranking_count;
  auto& rankings = j["rankings"] = nlohmann::ordered_json::array();
  for (const RankingVerdict& v : report.rankings) {
    nlohmann::ordered_json r;
    r["ranking"] = v.ranking;
    r["p1"] = v.p1;
    r["p2"] = v.p2;
    r["p3"] = v.p3;
    r["p4"] = v.p4;
    r["streett_rejected"] = v.streett_rejected;
    r["rabin_accepted"] = v.rabin_accepted;
    rankings.push_back(std::move(r));
  }
  auto& pairs = j["pairs"] = nlohmann::ordered_json::array();
  for (const PairVerdict& v : report.pairs) {
    nlohmann::ordered_json p;
    p["f"] = v.f;
    p["f_prime"] = v.f_prime;
    p["a"] = v.a;
    p["b"] = v.b;
    p["accepted"] = v.accepted;
    p["witness_valid"] = v.witness_valid;
    pairs.push_back(std::move(p));
  }
  j["lower_bound_states"] = report.lower_bound_states;
  j["lower_bound_statement"] = report.lower_bound_statement;
  j["overall"] = report.overall_pass ? "pass" : "fail";
  j["structural_ms"] = report.structural_ms;
  j["pairs_ms"] = report.pairs_ms;
  j["wall_ms"] = report.wall_ms;
  return j.dump(2) + "\n";
}

CampaignReport parse_report_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("report: ") + err.what());
  }
  try {
    CampaignReport report;
    report.tool = j.at("tool").get<std::string>();
    report.version = j.at("version").get<std::string>();
    report.config = config_from_json(j.at("config"));
    report.ranking_count = j.at("ranking_count").get<std::string>();
    for (const auto& r : j.at("rankings")) {
      RankingVerdict v;
      v.ranking = r.at("ranking").get<std::string>();
      v.p1 = r.at("p1").get<bool>();
      v.p2 = r.at("p2").get<bool>();
      v.p3 = r.at("p3").get<bool>();
      v.p4 = r.at("p4").get<bool>();
      v.streett_rejected = r.at("streett_rejected").get<bool>();
      v.rabin_accepted = r.at("rabin_accepted").get<bool>();
      report.rankings.push_back(std::move(v));
    }
    for (const auto& p : j.at("pairs")) {
      PairVerdict v;
      v.f = p.at("f").get<std::string>();
      v.f_prime = p.at("f_prime").get<std::string>();
      v.a = p.at("a").get<std::uint32_t>();
      v.b = p.at("b").get<std::uint32_t>();
      v.accepted = p.at("accepted").get<bool>();
      v.witness_valid = p.at("witness_valid").get<bool>();
      report.pairs.push_back(std::move(v));
    }
    report.lower_bound_states = j.at("lower_bound_states").get<std::string>();
    report.lower_bound_statement = j.at("lower_bound_statement").get<std::string>();
    const std::string overall = j.at("overall").get<std::string>();
    if (overall != "pass" && overall != "fail") throw ParseError("report: bad overall verdict");
    report.overall_pass = overall == "pass";
    report.structural_ms = j.at("structural_ms").get<std::uint64_t>();
    report.pairs_ms = j.at("pairs_ms").get<std::uint64_t>();
    report.wall_ms = j.at("wall_ms").get<std::uint64_t>();
    return report;
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("report: ") + err.what());
  }
}

void emit_report(const CampaignReport& report, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report file " + path.string());
  out << report_to_string(report);
  if (!out) throw std::runtime_error("error writing report file " + path.string());
}

CampaignReport parse_report(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open report file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_report_string(buf.str());
}

}  // namespace streett
