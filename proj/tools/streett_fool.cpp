// Command-line front end: generate witness words, verify their structural
// properties, decide lasso acceptance, count rankings, report the bound
// arithmetic, run whole campaigns and export run graphs to graphviz.
//
// Exit codes: 0 pass, 1 property/acceptance failure, 2 usage or parse error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "streett/acceptance.hpp"
#include "streett/automaton.hpp"
#include "streett/campaign.hpp"
#include "streett/dot.hpp"
#include "streett/qword.hpp"
#include "streett/ranking.hpp"
#include "streett/verifier.hpp"
#include "streett/version.hpp"
#include "streett/word_io.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

std::size_t env_path_cap() {
  const char* raw = std::getenv("STREETT_FOOL_PATH_CAP");
  if (!raw) return streett::kDefaultPathCap;
  char* end = nullptr;
  unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0) {
    throw streett::ParseError("STREETT_FOOL_PATH_CAP must be a positive integer");
  }
  return static_cast<std::size_t>(value);
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw streett::ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && s[start] == ' ') ++start;
  return s.substr(start);
}

streett::QRanking load_ranking(const std::filesystem::path& path) {
  return streett::QRanking::parse(trim(slurp(path)));
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("error writing " + path.string());
}

std::vector<streett::ExponentPair> parse_exponents(const std::string& text) {
  std::vector<streett::ExponentPair> out;
  std::istringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ';')) {
    std::size_t comma = item.find(',');
    if (comma == std::string::npos) {
      throw streett::ParseError("exponents: expected a,b pairs separated by ';'");
    }
    out.push_back(streett::ExponentPair{
        static_cast<std::uint32_t>(std::stoul(item.substr(0, comma))),
        static_cast<std::uint32_t>(std::stoul(item.substr(comma + 1)))});
  }
  if (out.empty()) throw streett::ParseError("exponents: empty list");
  return out;
}

struct GenOptions {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::string ranking;
  bool all = false;
  std::string out_dir = ".";
  std::uint64_t budget = 256;
};

int run_gen(const GenOptions& opt) {
  const auto aut = streett::build_full_streett(opt.n, opt.k);
  std::vector<streett::QRanking> rankings;
  if (opt.all) {
    const auto count = streett::count_q_rankings(opt.n, opt.k);
    if (count > opt.budget) {
      throw streett::BudgetExceeded("--all would write " + count.str() +
                                    " words; raise --budget to allow");
    }
    rankings = streett::enumerate_q_rankings(opt.n, opt.k);
  } else {
    rankings.push_back(streett::QRanking::parse(opt.ranking));
  }
  const std::filesystem::path dir(opt.out_dir);
  std::filesystem::create_directories(dir);
  for (const auto& f : rankings) {
    if (f.n() != opt.n || f.k() != opt.k) {
      throw streett::ParseError("ranking dimensions do not match -n/-k");
    }
    const auto qword = streett::build_q_word(aut, f);
    const std::string stem = "qword_" + f.hash();
    streett::save_word(qword.word, dir / (stem + ".fsw"));
    write_file(dir / (stem + ".rank"), f.to_string() + "\n");
    std::cout << (dir / (stem + ".fsw")).string() << "\n";
  }
  return kExitPass;
}

struct VerifyOptions {
  std::string word_file;
  std::string ranking_file;
  std::string report_file;
  std::size_t path_cap = streett::kDefaultPathCap;
};

int run_verify(const VerifyOptions& opt) {
  const auto word = streett::load_word(opt.word_file);
  const auto f = load_ranking(opt.ranking_file);
  const auto reports = streett::check_all_properties(word, f, opt.path_cap);
  bool all_hold = true;
  for (const auto& rep : reports) {
    if (rep.holds) {
      std::cout << streett::to_string(rep.property) << " holds\n";
    } else {
      all_hold = false;
      std::cout << streett::to_string(rep.property) << " FAILS: " << rep.detail << "\n";
    }
  }
  if (!opt.report_file.empty()) {
    write_file(opt.report_file, streett::property_reports_to_string(reports));
  }
  return all_hold ? kExitPass : kExitFail;
}

struct LassoOptions {
  std::string period_file;
  std::string prefix_file;
  std::string condition = "streett";
  std::string report_file;
};

int run_lasso(const LassoOptions& opt) {
  const auto period = streett::load_word(opt.period_file);
  streett::FiniteWord prefix(period.n(), period.k());
  if (!opt.prefix_file.empty()) prefix = streett::load_word(opt.prefix_file);
  const streett::LassoWord lasso(prefix, period);
  const auto aut = streett::build_full_streett(period.n(), period.k());

  const auto condition = opt.condition == "rabin" ? streett::AcceptanceCondition::rabin
                                                  : streett::AcceptanceCondition::streett;
  const auto verdict = condition == streett::AcceptanceCondition::streett
                           ? streett::streett_accepts(aut, lasso)
                           : streett::rabin_accepts(aut, lasso);
  std::cout << streett::to_string(condition) << ": "
            << (verdict.accepted ? "accepted" : "rejected") << "\n";
  if (!opt.report_file.empty()) {
    write_file(opt.report_file, streett::verdict_to_string(verdict, condition));
  }
  return verdict.accepted ? kExitPass : kExitFail;
}

struct SuiteOptions {
  streett::CampaignConfig config;
  std::string pairs = "all";
  std::string exponents;
  std::string report_file;
};

int run_suite(SuiteOptions opt) {
  opt.config.pair_policy =
      opt.pairs == "sample" ? streett::PairPolicy::sample : streett::PairPolicy::all_pairs;
  if (opt.config.pair_policy == streett::PairPolicy::sample && opt.config.sample_count == 0) {
    throw streett::ParseError("--pairs sample needs --samples >= 1");
  }
  if (!opt.exponents.empty()) opt.config.exponents = parse_exponents(opt.exponents);
  const auto report = streett::run_campaign(opt.config);
  std::cout << "rankings checked: " << report.rankings.size() << "\n"
            << "pair lassos checked: " << report.pairs.size() << "\n"
            << "ranking count: " << report.ranking_count << "\n"
            << "overall: " << (report.overall_pass ? "pass" : "fail") << " (" << report.wall_ms
            << " ms)\n";
  if (!opt.report_file.empty()) streett::emit_report(report, opt.report_file);
  return report.overall_pass ? kExitPass : kExitFail;
}

int run_count(std::uint32_t n, std::uint32_t k) {
  std::cout << streett::count_q_rankings(n, k).str() << "\n";
  return kExitPass;
}

int run_bound(std::uint32_t n, std::uint32_t k) {
  const auto rep = streett::lower_bound_report(n, k);
  std::cout << "{\n"
            << "  \"n\": " << rep.n << ",\n"
            << "  \"k\": " << rep.k << ",\n"
            << "  \"n0\": " << rep.n0 << ",\n"
            << "  \"k0\": " << rep.k0 << ",\n"
            << "  \"ranking_count\": \"" << rep.ranking_count.str() << "\",\n"
            << "  \"regime\": \"" << streett::to_string(rep.regime) << "\"\n"
            << "}\n";
  return kExitPass;
}

int run_export_dot(const std::string& word_file, const std::string& out_file) {
  const auto word = streett::load_word(word_file);
  const std::string dot = streett::to_dot(word);
  if (out_file.empty()) {
    std::cout << dot;
  } else {
    write_file(out_file, dot);
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"full Streett automata: witness-word construction and machine verification"};
  app.set_version_flag("--version", std::string(streett::kToolName) + " " + streett::kVersion);
  app.require_subcommand(1);

  std::size_t default_cap = streett::kDefaultPathCap;
  try {
    default_cap = env_path_cap();
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitError;
  }

  GenOptions gen;
  auto* cmd_gen = app.add_subcommand("gen", "build witness words for rankings");
  cmd_gen->add_option("-n", gen.n, "number of q-states")->required();
  cmd_gen->add_option("-k", gen.k, "index size")->required();
  auto* gen_ranking = cmd_gen->add_option("--ranking", gen.ranking, "one ranking, e.g. r=[2,1,3];h=[[1,2],[1,2],[2,1]]");
  auto* gen_all = cmd_gen->add_flag("--all", gen.all, "every ranking of (n,k)");
  gen_ranking->excludes(gen_all);
  cmd_gen->add_option("-o,--out-dir", gen.out_dir, "output directory");
  cmd_gen->add_option("--budget", gen.budget, "enumeration budget for --all");

  VerifyOptions verify;
  auto* cmd_verify = app.add_subcommand("verify", "check the four structural properties");
  cmd_verify->add_option("word-file", verify.word_file)->required();
  cmd_verify->add_option("ranking-file", verify.ranking_file)->required();
  cmd_verify->add_option("--report", verify.report_file, "write a JSON report");
  verify.path_cap = default_cap;
  cmd_verify->add_option("--path-cap", verify.path_cap, "abort enumeration beyond this many paths");

  LassoOptions lasso;
  auto* cmd_lasso = app.add_subcommand("lasso", "decide acceptance of prefix·period^ω");
  cmd_lasso->add_option("--period", lasso.period_file, "period word file")->required();
  cmd_lasso->add_option("--prefix", lasso.prefix_file, "prefix word file (default empty)");
  cmd_lasso->add_option("--condition", lasso.condition, "streett or rabin")
      ->check(CLI::IsMember({"streett", "rabin"}));
  cmd_lasso->add_option("--report", lasso.report_file, "write a JSON verdict report");

  std::uint32_t count_n = 0, count_k = 0;
  auto* cmd_count = app.add_subcommand("count", "exact number of rankings n!·(k!)^n");
  cmd_count->add_option("-n", count_n)->required();
  cmd_count->add_option("-k", count_k)->required();

  std::uint32_t bound_n = 0, bound_k = 0;
  auto* cmd_bound = app.add_subcommand("bound", "lower-bound arithmetic for an (n,k) instance");
  cmd_bound->add_option("-n", bound_n)->required();
  cmd_bound->add_option("-k", bound_k)->required();

  SuiteOptions suite;
  auto* cmd_suite = app.add_subcommand("suite", "run the full verification campaign");
  cmd_suite->add_option("-n", suite.config.n)->required();
  cmd_suite->add_option("-k", suite.config.k)->required();
  cmd_suite->add_option("--pairs", suite.pairs, "all or sample")
      ->check(CLI::IsMember({"all", "sample"}));
  cmd_suite->add_option("--samples", suite.config.sample_count, "number of sampled pairs");
  cmd_suite->add_option("--seed", suite.config.seed, "sampling seed");
  cmd_suite->add_option("--exponents", suite.exponents, "e.g. \"1,1;1,2;2,1;2,2\"");
  suite.config.path_cap = default_cap;
  cmd_suite->add_option("--path-cap", suite.config.path_cap);
  cmd_suite->add_option("--budget", suite.config.enumeration_budget);
  cmd_suite->add_option("--threads", suite.config.threads, "0 = hardware concurrency");
  cmd_suite->add_option("-o,--report", suite.report_file, "write the JSON campaign report");

  std::string dot_word_file, dot_out_file;
  auto* cmd_dot = app.add_subcommand("export-dot", "graphviz rendering of a word's run graph");
  cmd_dot->add_option("word-file", dot_word_file)->required();
  cmd_dot->add_option("-o,--out", dot_out_file, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitPass : kExitError;
  }

  try {
    if (cmd_gen->parsed()) {
      if (!gen.all && gen.ranking.empty()) {
        throw streett::ParseError("gen needs --ranking or --all");
      }
      return run_gen(gen);
    }
    if (cmd_verify->parsed()) return run_verify(verify);
    if (cmd_lasso->parsed()) return run_lasso(lasso);
    if (cmd_count->parsed()) return run_count(count_n, count_k);
    if (cmd_bound->parsed()) return run_bound(bound_n, bound_k);
    if (cmd_suite->parsed()) return run_suite(suite);
    if (cmd_dot->parsed()) return run_export_dot(dot_word_file, dot_out_file);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
