#include "rdss/commands.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>

#include "rdss/bounds.hpp"
#include "rdss/code.hpp"
#include "rdss/combinatorics.hpp"
#include "rdss/constructions.hpp"
#include "rdss/duality.hpp"
#include "rdss/field.hpp"
#include "rdss/graph.hpp"
#include "rdss/linear.hpp"
#include "rdss/resilience.hpp"

namespace rdss {

using nlohmann::json;

namespace {

constexpr std::size_t report_word_limit = 1024;

/// A failure that maps to a specific status, raised inside a command.
struct StatusError : Error {
  Status status;
  StatusError(Status s, const std::string& what) : Error(what), status(s) {}
};

const char* status_name(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::verification_failed: return "verification_failed";
    case Status::parse_error: return "parse_error";
    case Status::partial: return "partial";
    case Status::cap_exceeded: return "cap_exceeded";
    case Status::usage: return "usage";
    case Status::internal: return "internal";
  }
  return "internal";
}

json graph_json(const Graph& g) {
  return {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"directed", g.directed()}};
}

json words_json(const std::vector<Word>& words, unsigned q) {
  json out = json::array();
  for (const auto& w : words) out.push_back(format_word(w, q));
  return out;
}

json code_json(const Code& c) {
  json out = {{"q", c.alphabet()}, {"length", c.length()}, {"size", c.size()}, {"dimension", c.dimension()}};
  if (c.size() <= report_word_limit) {
    out["words"] = words_json(c.words(), c.alphabet());
  } else {
    out["words"] = words_json({c.words().begin(), c.words().begin() + report_word_limit}, c.alphabet());
    out["words_truncated"] = true;
  }
  return out;
}

json matrix_json(const FieldMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(std::vector<Symbol>(m.row(r).begin(), m.row(r).end()));
  return rows;
}

json rational_json(const Rational& r) { return {{"exact", r.str()}, {"value", r.convert_to<double>()}}; }

const char* kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::lower: return "lower";
    case BoundKind::upper: return "upper";
    case BoundKind::info: return "info";
  }
  return "info";
}

json bounds_json(const BoundsReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json j = {{"name", e.name}, {"kind", kind_name(e.kind)}, {"value", e.value}, {"detail", e.detail}};
    if (!e.vertices.empty()) j["vertices"] = e.vertices;
    if (!e.groups.empty()) j["groups"] = e.groups;
    if (e.matrix) j["matrix"] = matrix_json(*e.matrix);
    entries.push_back(std::move(j));
  }
  json omitted = json::array();
  for (const auto& o : r.omitted) omitted.push_back({{"name", o.name}, {"reason", o.reason}, {"infeasible", o.infeasible}});
  json out = {{"q", r.q}, {"lower", r.lower}, {"upper", r.upper}, {"entries", entries}, {"omitted", omitted}};
  out["exact"] = r.exact ? json(*r.exact) : json(nullptr);
  return out;
}

json options_json(const CommandOptions& o) {
  const auto& l = o.limits;
  return {{"q", o.q},
          {"exact", o.exact},
          {"method", o.method},
          {"coop_t", o.coop_t},
          {"distance", o.distance ? json(*o.distance) : json(nullptr)},
          {"repair_trials", o.repair_trials},
          {"limits",
           {{"state_cap", l.state_cap},
            {"subset_cap", l.subset_cap},
            {"cycle_cap", l.cycle_cap},
            {"minrank_cap", l.minrank_cap},
            {"clique_cap", l.clique_cap},
            {"aq_exact_cap", l.aq_exact_cap},
            {"search_cap", l.search_cap},
            {"threads", l.threads}}}};
}

Code parse_matching_code(const Graph& g, const std::string& text) {
  Code c = parse_code(text);
  if (c.length() != g.vertex_count())
    throw ParseError(0, "code length " + std::to_string(c.length()) + " does not match " +
                            std::to_string(g.vertex_count()) + " vertices");
  return c;
}

/// Emitted codes must survive write, parse and verify unchanged.
std::string emit_code(const Graph& g, const Code& c) {
  auto text = serialize_code(c);
  auto back = parse_code(text);
  if (!(back == c) || !verify_rdss(g, back).ok) throw Error("emitted code does not re-verify on read-back");
  return text;
}

class Runner {
public:
  Runner(const std::string& graph_text, const std::optional<std::string>& code_text, const CommandOptions& o,
         CommandResult& out)
      : graph_text_(graph_text), code_text_(code_text), o_(o), out_(out) {}

  void run(const std::string& command) {
    static const std::map<std::string, void (Runner::*)()> table = {
        {"bounds", &Runner::bounds},   {"capacity", &Runner::capacity}, {"construct", &Runner::construct},
        {"verify", &Runner::verify},   {"minrank", &Runner::minrank},   {"dualize", &Runner::dualize},
    };
    auto it = table.find(command);
    if (it == table.end()) throw StatusError(Status::usage, "unknown command '" + command + "'");
    if (o_.q < 2) throw StatusError(Status::usage, "q must be at least 2");
    try {
      g_ = parse_graph(graph_text_);
    } catch (const ParseError& e) {
      throw ParseError(0, std::string("graph file: ") + e.what());
    }
    out_.report["graph"] = graph_json(g_);
    (this->*(it->second))();
  }

private:
  json& result() { return out_.report["result"]; }
  void notice(const std::string& s) { out_.report["notices"].push_back(s); }
  void set_status(Status s) { out_.status = s; }

  Code input_code() {
    if (!code_text_) throw StatusError(Status::usage, "this command needs a code file");
    try {
      return parse_matching_code(g_, *code_text_);
    } catch (const ParseError& e) {
      throw ParseError(0, std::string("code file: ") + e.what());
    }
  }

  void bounds() {
    auto r = bounds_report(g_, o_.q, o_.limits, o_.exact);
    result() = bounds_json(r);
    if (r.partial()) set_status(Status::partial);
  }

  void capacity() {
    if (!o_.exact) {
      auto r = bounds_report(g_, o_.q, o_.limits, false);
      result() = {{"exact", false}, {"bounds", bounds_json(r)}};
      if (r.partial()) set_status(Status::partial);
      return;
    }
    try {
      auto cap = capacity_exact(g_, o_.q, o_.limits);
      result() = {{"exact", true}, {"dimension", cap.dimension}, {"bits", cap.bits}, {"code", code_json(cap.code)}};
      out_.artifacts.emplace_back("capacity.code", emit_code(g_, cap.code));
    } catch (const CapExceeded& e) {
      notice(std::string("exact search skipped: ") + e.what() + "; reporting bounds instead");
      auto r = bounds_report(g_, o_.q, o_.limits, false);
      result() = {{"exact", false}, {"bounds", bounds_json(r)}};
      set_status(Status::cap_exceeded);
    }
  }

  void require(bool directed_method) {
    if (g_.directed() != directed_method)
      throw StatusError(Status::usage, "method '" + o_.method + "' needs " +
                                           (directed_method ? "a directed" : "an undirected") + " graph");
  }

  void construct() {
    const auto& m = o_.method;
    if (m == "matching" || m == "cliques" || m == "cycles") {
      Code c = [&] {
        if (m == "matching") {
          require(false);
          auto mm = max_matching(g_);
          std::vector<std::vector<Vertex>> groups;
          for (auto [u, v] : mm.edges) groups.push_back({u, v});
          result()["groups"] = groups;
          return matching_code(g_, o_.q, o_.limits);
        }
        if (m == "cliques") {
          require(false);
          auto mode = g_.vertex_count() <= o_.limits.subset_cap ? SolveMode::exact : SolveMode::approx;
          std::vector<std::vector<Vertex>> groups;
          for (const auto& p : clique_partition(g_, mode, o_.limits)) groups.push_back(p.members());
          result()["groups"] = groups;
          result()["partition"] = mode == SolveMode::exact ? "minimum" : "greedy";
          return clique_partition_code(g_, o_.q, mode, o_.limits);
        }
        require(true);
        result()["groups"] = max_vertex_disjoint_cycles(g_, o_.limits);
        return cycle_replication_code(g_, o_.q, o_.limits);
      }();
      result()["method"] = m;
      result()["code"] = code_json(c);
      result()["verified"] = true;
      out_.artifacts.emplace_back(m + ".code", emit_code(g_, c));
      return;
    }
    if (m == "lp") {
      require(true);
      lp();
      return;
    }
    throw StatusError(Status::usage, m.empty() ? "construct needs --method matching|cycles|cliques|lp"
                                                : "unknown method '" + m + "'");
  }

  void lp() {
    auto packing = fractional_cycle_packing(g_, o_.limits);
    VectorCode code(g_, packing, o_.q);
    const auto n = g_.vertex_count();
    bool repaired = check_vector_repair(code, n, o_.repair_trials, o_.seed);
    json cycles = json::array();
    for (std::size_t i = 0; i < packing.cycles.size(); ++i)
      cycles.push_back({{"vertices", packing.cycles[i]},
                        {"weight", rational_json(packing.weights[i])},
                        {"multiplicity", packing.multiplicities[i].str()}});
    result() = {{"method", "lp"},
                {"K", rational_json(packing.value)},
                {"p", packing.denominator.str()},
                {"pK", code.message_length()},
                {"max_load", code.max_load()},
                {"enumerated_cycles", packing.enumerated},
                {"balanced", packing.balanced},
                {"cycles", cycles},
                {"repair_trials", o_.repair_trials},
                {"repair_ok", repaired}};
    if (!repaired) throw Error("vector code failed its repair check");
    auto text = serialize_vector_code(code, n);
    auto back = parse_vector_code(text);
    VectorCode reread(g_, back.packing, back.q);
    if (serialize_vector_code(reread, n) != text || !check_vector_repair(reread, n, o_.repair_trials, o_.seed))
      throw Error("emitted vector code does not re-verify on read-back");
    out_.artifacts.emplace_back("lp.vcode", text);
  }

  void verify() {
    Code c = input_code();
    bool ok = true;
    auto check = verify_rdss(g_, c);
    json r = {{"code", {{"q", c.alphabet()}, {"size", c.size()}, {"dimension", c.dimension()}}}, {"rdss", check.ok}};
    if (!check.ok) {
      ok = false;
      const auto& w = *check.witness;
      r["witness"] = {{"vertex", w.vertex}, {"x", format_word(w.x, c.alphabet())}, {"y", format_word(w.y, c.alphabet())}};
      notice("vertex " + std::to_string(w.vertex) + " cannot tell " + format_word(w.x, c.alphabet()) + " from " +
             format_word(w.y, c.alphabet()));
    }
    if (o_.coop_t) {
      auto coop = verify_cooperative(g_, c, o_.coop_t);
      json j = {{"t", o_.coop_t}, {"ok", coop.ok}};
      if (!coop.ok) {
        ok = false;
        j["failed"] = coop.failed;
        j["x"] = format_word(coop.x, c.alphabet());
        j["y"] = format_word(coop.y, c.alphabet());
        notice("connected set of size " + std::to_string(coop.failed.size()) + " cannot be repaired cooperatively");
      }
      r["cooperative"] = j;
    }
    if (o_.distance) r["distance"] = distance_checks(c, *o_.distance, ok);
    r["ok"] = ok;
    result() = r;
    if (!ok) set_status(Status::verification_failed);
  }

  json distance_checks(const Code& c, std::size_t d, bool& ok) {
    if (d < 1) throw StatusError(Status::usage, "--distance must be at least 1");
    auto md = min_distance(c);
    bool meets = md.value >= d;
    if (!meets) notice("minimum distance " + std::to_string(md.value) + " is below the required " + std::to_string(d));
    ok = ok && meets;
    json j = {{"required", d}, {"min_distance", md.singleton ? json(nullptr) : json(md.value)}, {"meets", meets}};
    const auto n = g_.vertex_count();
    const auto k = static_cast<std::size_t>(std::ceil(c.dimension() - 1e-9));
    if (k >= 1 && k <= n) {
      auto db = distance_upper_bound(g_, k, o_.limits);
      j["distance_bound"] = {{"k", k}, {"value", db.value}, {"consistent", static_cast<long>(d) <= db.value}};
    }
    auto ab = alpha_bound(g_, d, c.alphabet(), o_.limits);
    j["alpha_bound"] = {{"value", ab.value}, {"k_max", ab.k_max}, {"consistent", static_cast<long>(k) <= ab.k_max}};
    return j;
  }

  void minrank() {
    auto m = rdss::minrank(g_, o_.q, o_.limits);
    result() = {{"q", o_.q},
                {"minrank", m.rank},
                {"witness", matrix_json(m.witness)},
                {"search_space", m.search_space},
                {"linear_code_dimension", g_.vertex_count() - m.rank}};
  }

  void dualize() {
    Code c = input_code();
    auto check = verify_rdss(g_, c);
    if (!check.ok) {
      result() = {{"rdss", false}, {"witness_vertex", check.witness->vertex}};
      throw StatusError(Status::verification_failed, "input code is not an RDSS code on this graph");
    }
    const unsigned q = c.alphabet();
    const auto n = g_.vertex_count();
    auto family = greedy_covering(c, o_.limits);
    auto idx = index_from_rdss(g_, c, family, o_.limits);
    bool round_trip = check_index_code(g_, idx, o_.limits);
    json r = {{"q", q},
              {"code_size", c.size()},
              {"generators", words_json(family.generators, q)},
              {"generator_count", family.size()},
              {"generator_bound", covering_generator_bound(q, n, c.size())},
              {"distinct_translates", family.distinct},
              {"label_count", idx.label_count},
              {"index_length", idx.length},
              {"index_length_ceil", static_cast<std::size_t>(std::ceil(idx.length - 1e-9))},
              {"transmitted", idx.transmitted},
              {"length_bound", index_length_bound(q, n, c.size())},
              {"within_bound", within_index_bound(q, n, c.size(), idx.label_count)},
              {"round_trip", round_trip}};
    if (is_prime(q) && is_linear(c)) {
      auto syn = syndrome_index_code(g_, c);
      r["syndrome"] = {{"length", syn.length()}, {"round_trip", check_round_trip(g_, syn, o_.limits)}};
    }
    result() = r;
    if (!round_trip) throw Error("covering index code failed its exhaustive round trip");
    auto text = serialize_covering(family);
    if (parse_covering(text, q, n) != family.generators) throw Error("emitted covering does not re-read");
    out_.artifacts.emplace_back("covering.txt", text);
  }

  const std::string& graph_text_;
  const std::optional<std::string>& code_text_;
  const CommandOptions& o_;
  CommandResult& out_;
  Graph g_;
};

std::uint64_t parse_unsigned(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    auto v = std::stoull(value, &used);
    if (used == value.size() && value[0] != '-') return v;
  } catch (const std::exception&) {
  }
  throw InvalidArgument("option " + key + " expects a non-negative integer, got '" + value + "'");
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true" || value == "on" || value == "yes") return true;
  if (value == "0" || value == "false" || value == "off" || value == "no") return false;
  throw InvalidArgument("option " + key + " expects a boolean, got '" + value + "'");
}

}  // namespace

void set_option(CommandOptions& o, const std::string& key, const std::string& value) {
  auto u = [&] { return parse_unsigned(key, value); };
  auto small = [&] {
    auto v = u();
    if (v > 1u << 30) throw InvalidArgument("option " + key + " is out of range");
    return static_cast<unsigned>(v);
  };
  if (key == "q") o.q = small();
  else if (key == "exact") o.exact = parse_bool(key, value);
  else if (key == "method") o.method = value;
  else if (key == "coop_t") o.coop_t = small();
  else if (key == "distance") o.distance = u();
  else if (key == "seed") o.seed = u();
  else if (key == "repair_trials") o.repair_trials = u();
  else if (key == "timing") o.timing = parse_bool(key, value);
  else if (key == "state_cap") o.limits.state_cap = u();
  else if (key == "subset_cap") o.limits.subset_cap = small();
  else if (key == "cycle_cap") o.limits.cycle_cap = u();
  else if (key == "minrank_cap") o.limits.minrank_cap = u();
  else if (key == "clique_cap") o.limits.clique_cap = u();
  else if (key == "aq_exact_cap") o.limits.aq_exact_cap = u();
  else if (key == "search_cap") o.limits.search_cap = u();
  else if (key == "threads") o.limits.threads = std::max(1u, small());
  else throw InvalidArgument("unknown option '" + key + "'");
}

CommandResult run_command(const std::string& command, const std::string& graph_text,
                          const std::optional<std::string>& code_text, const CommandOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CommandResult out;
  out.report = {{"schema_version", report_schema_version},
                {"tool", "rdss"},
                {"version", tool_version},
                {"command", {{"name", command}, {"options", options_json(options)}}},
                {"seed", options.seed},
                {"notices", json::array()},
                {"result", json::object()}};
  auto fail = [&](Status s, const std::string& what) {
    out.status = s;
    out.report["error"] = what;
    out.artifacts.clear();
  };
  try {
    Runner(graph_text, code_text, options, out).run(command);
  } catch (const StatusError& e) {
    fail(e.status, e.what());
  } catch (const ParseError& e) {
    fail(Status::parse_error, e.what());
  } catch (const CapExceeded& e) {
    fail(Status::cap_exceeded, e.what());
  } catch (const InvalidArgument& e) {
    fail(Status::usage, e.what());
  } catch (const std::exception& e) {
    fail(Status::internal, e.what());
  }
  out.report["status"] = static_cast<int>(out.status);
  out.report["status_name"] = status_name(out.status);
  json names = json::array();
  for (const auto& a : out.artifacts) names.push_back(a.first);
  out.report["artifacts"] = names;
  if (options.timing) {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.report["timing"] = {{"total_ms", ms}};
  }
  return out;
}

}  // namespace rdss
