#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rdss/rdss.h"

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Flag {
  const char* name;   // command-line flag
  const char* key;    // rdss_options_set key
  const char* env;    // environment fallback
  const char* help;
};

constexpr Flag value_flags[] = {
    {"--q", "q", "RDSS_Q", "alphabet size (default 2)"},
    {"--method", "method", "RDSS_METHOD", "construction: matching, cycles, cliques or lp"},
    {"--coop-t", "coop_t", "RDSS_COOP_T", "also check cooperative repair of connected sets up to this size (1 or 2)"},
    {"--distance", "distance", "RDSS_DISTANCE", "required minimum distance; also evaluates the distance bounds"},
    {"--seed", "seed", "RDSS_SEED", "seed for randomized checks (default 1)"},
    {"--repair-trials", "repair_trials", "RDSS_REPAIR_TRIALS", "random messages for vector-code repair checks"},
    {"--state-cap", "state_cap", "RDSS_STATE_CAP", "max strings enumerated by exact searches"},
    {"--subset-cap", "subset_cap", "RDSS_SUBSET_CAP", "max vertices for subset searches"},
    {"--cycle-cap", "cycle_cap", "RDSS_CYCLE_CAP", "max enumerated directed cycles"},
    {"--minrank-cap", "minrank_cap", "RDSS_MINRANK_CAP", "max fitting matrices searched"},
    {"--clique-cap", "clique_cap", "RDSS_CLIQUE_CAP", "max vertices of a materialized confusion graph"},
    {"--aq-exact-cap", "aq_exact_cap", "RDSS_AQ_EXACT_CAP", "max q^n for exact A_q(n,d)"},
    {"--search-cap", "search_cap", "RDSS_SEARCH_CAP", "max branch-and-bound nodes of one clique search"},
    {"--threads", "threads", "RDSS_THREADS", "worker threads"},
};

constexpr int usage_status = RDSS_USAGE;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Storage codes on graphs: bounds, constructions, verification and index-code duals"};
  app.set_version_flag("--version", std::string(rdss_version()));
  app.require_subcommand(1);
  app.fallthrough();

  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  for (const auto& f : value_flags) {
    options[f.key] = app.add_option(f.name, values[f.key], f.help)->envname(f.env);
  }
  bool exact = true, timing = false;
  auto* exact_opt = app.add_flag("--exact,!--no-exact", exact, "run the exact search (default on)")->envname("RDSS_EXACT");
  auto* timing_opt = app.add_flag("--timing", timing, "add wall-clock timing to the report")->envname("RDSS_TIMING");
  std::string out_dir;
  app.add_option("--out", out_dir, "directory for emitted code, vector-code and covering files")->envname("RDSS_OUT");

  std::string graph_path, code_path;
  struct Sub {
    const char* name;
    const char* help;
    bool needs_code;
  };
  const Sub subs[] = {
      {"bounds", "lower and upper capacity bounds with witnesses", false},
      {"capacity", "exact storage capacity and a largest code", false},
      {"construct", "build a code with --method", false},
      {"verify", "check that a code repairs every vertex", true},
      {"minrank", "minimum rank of a matrix fitting the graph", false},
      {"dualize", "turn a code into an index code through a greedy covering", true},
  };
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("graph", graph_path, "graph file")->required();
    if (s.needs_code) sub->add_option("code", code_path, "code file")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : usage_status;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  std::unique_ptr<rdss_options, decltype(&rdss_options_free)> opts(rdss_options_new(), rdss_options_free);
  for (const auto& [key, opt] : options) {
    if (opt->count() == 0) continue;
    if (rdss_options_set(opts.get(), key.c_str(), values[key].c_str()) != RDSS_OK) {
      std::cerr << "rdss: " << rdss_last_error() << '\n';
      return usage_status;
    }
  }
  if (exact_opt->count()) rdss_options_set(opts.get(), "exact", exact ? "1" : "0");
  if (timing_opt->count()) rdss_options_set(opts.get(), "timing", timing ? "1" : "0");

  auto graph = read_file(graph_path);
  if (!graph) {
    std::cerr << "rdss: cannot read graph file " << graph_path << '\n';
    return RDSS_PARSE_ERROR;
  }
  std::optional<std::string> code;
  if (!code_path.empty()) {
    code = read_file(code_path);
    if (!code) {
      std::cerr << "rdss: cannot read code file " << code_path << '\n';
      return RDSS_PARSE_ERROR;
    }
  }

  rdss_result* raw = nullptr;
  rdss_status status = rdss_run(command.c_str(), graph->c_str(), code ? code->c_str() : nullptr, opts.get(), &raw);
  std::unique_ptr<rdss_result, decltype(&rdss_result_free)> result(raw, rdss_result_free);
  if (!result) {
    std::cerr << "rdss: " << rdss_last_error() << '\n';
    return status;
  }
  std::cout << rdss_result_report(result.get()) << '\n';
  if (status != RDSS_OK) std::cerr << "rdss: " << rdss_last_error() << '\n';

  if (!out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    for (size_t i = 0; i < rdss_result_artifact_count(result.get()); ++i) {
      auto path = std::filesystem::path(out_dir) / rdss_result_artifact_name(result.get(), i);
      std::ofstream f(path, std::ios::binary);
      f << rdss_result_artifact_content(result.get(), i);
      if (!f) {
        std::cerr << "rdss: cannot write " << path.string() << '\n';
        return RDSS_INTERNAL;
      }
    }
  }
  return status;
}
