#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "rdss/rdss.h"

using nlohmann::json;

namespace {

std::string data(const std::string& name) {
  std::ifstream in(std::string(RDSS_DATA_DIR) + "/" + name);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

using Options = std::unique_ptr<rdss_options, decltype(&rdss_options_free)>;
using Result = std::unique_ptr<rdss_result, decltype(&rdss_result_free)>;

Options options(std::initializer_list<std::pair<const char*, const char*>> kv = {}) {
  Options o(rdss_options_new(), rdss_options_free);
  for (auto [k, v] : kv) REQUIRE(rdss_options_set(o.get(), k, v) == RDSS_OK);
  return o;
}

struct Run {
  rdss_status status;
  json report;
  Result result;
};

Run run(const char* command, const std::string& graph, const char* code = nullptr,
        std::initializer_list<std::pair<const char*, const char*>> kv = {}) {
  auto o = options(kv);
  rdss_result* raw = nullptr;
  std::string code_text = code ? data(code) : "";
  auto s = rdss_run(command, data(graph).c_str(), code ? code_text.c_str() : nullptr, o.get(), &raw);
  Result r(raw, rdss_result_free);
  REQUIRE(r);
  CHECK(rdss_result_status(r.get()) == s);
  return {s, json::parse(rdss_result_report(r.get())), std::move(r)};
}

const json* entry(const json& bounds, const std::string& name) {
  for (const auto& e : bounds["entries"])
    if (e["name"] == name) return &e;
  return nullptr;
}

int cli(const std::string& args, std::string* out = nullptr, const std::string& env = "") {
  auto path = std::filesystem::temp_directory_path() / "rdss_cli_test_stdout.json";
  std::string cmd = env + " '" + std::string(RDSS_CLI_PATH) + "' " + args + " > '" + path.string() + "' 2>/dev/null";
  int rc = std::system(cmd.c_str());
  if (out) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    *out = buf.str();
  }
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string file(const std::string& name) { return std::string(RDSS_DATA_DIR) + "/" + name; }

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("handles and error reporting") {
    CHECK(std::string(rdss_version()) == "1.0.0");
    rdss_graph* g = nullptr;
    REQUIRE(rdss_graph_parse(data("pentagon.graph").c_str(), &g) == RDSS_OK);
    CHECK(rdss_graph_vertex_count(g) == 5);
    CHECK(rdss_graph_edge_count(g) == 5);
    CHECK(rdss_graph_directed(g) == 0);

    rdss_graph* bad = nullptr;
    CHECK(rdss_graph_parse("p rdss 3 1 u\ne 0 7\n", &bad) == RDSS_PARSE_ERROR);
    CHECK(bad == nullptr);
    CHECK(std::string(rdss_last_error()).find("line 2") != std::string::npos);
    CHECK(rdss_graph_parse(nullptr, &bad) == RDSS_USAGE);

    rdss_code* c = nullptr;
    REQUIRE(rdss_code_parse(data("pentagon.code").c_str(), &c) == RDSS_OK);
    CHECK(rdss_code_size(c) == 5);
    CHECK(rdss_code_length(c) == 5);
    CHECK(rdss_code_alphabet(c) == 2);
    CHECK(rdss_code_dimension(c) == doctest::Approx(std::log2(5.0)));
    CHECK(rdss_verify(g, c) == RDSS_OK);
    CHECK(std::string(rdss_last_error()).empty());

    char* text = nullptr;
    REQUIRE(rdss_code_serialize(c, &text) == RDSS_OK);
    rdss_code* again = nullptr;
    REQUIRE(rdss_code_parse(text, &again) == RDSS_OK);
    CHECK(rdss_verify(g, again) == RDSS_OK);
    rdss_string_free(text);
    rdss_code_free(again);

    rdss_code* worse = nullptr;
    REQUIRE(rdss_code_parse(data("pentagon_bad.code").c_str(), &worse) == RDSS_OK);
    CHECK(rdss_verify(g, worse) == RDSS_VERIFY_FAILED);
    CHECK(std::string(rdss_last_error()).find("vertex 0") != std::string::npos);
    rdss_code_free(worse);
    rdss_code_free(c);
    rdss_graph_free(g);
  }

  TEST_CASE("options") {
    auto o = options();
    CHECK(rdss_options_set(o.get(), "q", "3") == RDSS_OK);
    CHECK(rdss_options_set(o.get(), "q", "three") == RDSS_USAGE);
    CHECK(rdss_options_set(o.get(), "colour", "1") == RDSS_USAGE);
    CHECK(rdss_options_set(o.get(), "exact", "maybe") == RDSS_USAGE);
    CHECK(rdss_options_set(o.get(), "state_cap", "-4") == RDSS_USAGE);
    CHECK(rdss_options_set(nullptr, "q", "2") == RDSS_USAGE);
  }

  TEST_CASE("minrank and capacity entry points") {
    auto check_minrank = [](const char* graph, const char* q, std::size_t expected) {
      rdss_graph* g = nullptr;
      REQUIRE(rdss_graph_parse(data(graph).c_str(), &g) == RDSS_OK);
      std::size_t rank = 0;
      CHECK(rdss_minrank(g, options({{"q", q}}).get(), &rank) == RDSS_OK);
      CHECK(rank == expected);
      rdss_graph_free(g);
    };
    check_minrank("pentagon.graph", "2", 3);
    check_minrank("k4.graph", "2", 1);
    check_minrank("edgeless3.graph", "2", 3);

    rdss_graph* g = nullptr;
    REQUIRE(rdss_graph_parse(data("pentagon.graph").c_str(), &g) == RDSS_OK);
    std::size_t rank = 0;
    CHECK(rdss_minrank(g, options({{"q", "4"}}).get(), &rank) == RDSS_USAGE);
    double dim = 0;
    rdss_code* best = nullptr;
    CHECK(rdss_capacity(g, nullptr, &dim, &best) == RDSS_OK);
    CHECK(dim == doctest::Approx(std::log2(5.0)));
    CHECK(rdss_code_size(best) == 5);
    CHECK(rdss_verify(g, best) == RDSS_OK);
    rdss_code_free(best);
    CHECK(rdss_capacity(g, options({{"state_cap", "8"}}).get(), &dim, nullptr) == RDSS_CAP_EXCEEDED);
    rdss_graph_free(g);
  }

  TEST_CASE("report envelope") {
    auto a = run("bounds", "pentagon.graph");
    auto b = run("bounds", "pentagon.graph");
    CHECK(std::string(rdss_result_report(a.result.get())) == rdss_result_report(b.result.get()));
    CHECK(a.report["schema_version"] == 1);
    CHECK(a.report["version"] == "1.0.0");
    CHECK(a.report["command"]["name"] == "bounds");
    CHECK(a.report["seed"] == 1);
    CHECK(a.report["graph"]["vertices"] == 5);
    CHECK(!a.report.contains("timing"));
    auto t = run("bounds", "pentagon.graph", nullptr, {{"timing", "1"}});
    CHECK(t.report["timing"]["total_ms"].get<double>() >= 0);
    rdss_result* raw = nullptr;
    CHECK(rdss_run("explode", data("pentagon.graph").c_str(), nullptr, nullptr, &raw) == RDSS_USAGE);
    Result r(raw, rdss_result_free);
    CHECK(json::parse(rdss_result_report(r.get()))["status_name"] == "usage");
  }

  TEST_CASE("bounds command") {
    auto p = run("bounds", "pentagon.graph");
    CHECK(p.status == RDSS_OK);
    const auto& res = p.report["result"];
    CHECK(res["lower"] == 2.0);
    CHECK(res["upper"] == 3.0);
    CHECK(entry(res, "matching")->at("groups").size() == 2);
    CHECK(entry(res, "vertex_cover")->at("vertices").size() == 3);
    CHECK(entry(res, "minrank")->at("value") == 2.0);
    CHECK(entry(res, "minrank")->at("matrix").size() == 5);
    CHECK(res["exact"].get<double>() == doctest::Approx(std::log2(5.0)));

    auto c4 = run("bounds", "c4.graph");
    CHECK(c4.report["result"]["lower"] == 2.0);
    CHECK(c4.report["result"]["upper"] == 2.0);
    auto tri = run("bounds", "directed_triangle.graph");
    CHECK(tri.report["result"]["lower"] == 1.0);
    CHECK(tri.report["result"]["upper"] == 1.0);
    CHECK(entry(tri.report["result"], "feedback_vertex_set") != nullptr);

    auto partial = run("bounds", "pentagon.graph", nullptr, {{"subset_cap", "2"}, {"state_cap", "8"}});
    CHECK(partial.status == RDSS_PARTIAL);
    CHECK(!partial.report["result"]["omitted"].empty());
    CHECK(!partial.report["result"]["entries"].empty());
  }

  TEST_CASE("capacity command") {
    auto p = run("capacity", "pentagon.graph");
    CHECK(p.report["result"]["dimension"].get<double>() == doctest::Approx(std::log2(5.0)));
    REQUIRE(rdss_result_artifact_count(p.result.get()) == 1);
    CHECK(std::string(rdss_result_artifact_name(p.result.get(), 0)) == "capacity.code");
    rdss_code* c = nullptr;
    REQUIRE(rdss_code_parse(rdss_result_artifact_content(p.result.get(), 0), &c) == RDSS_OK);
    rdss_graph* g = nullptr;
    REQUIRE(rdss_graph_parse(data("pentagon.graph").c_str(), &g) == RDSS_OK);
    CHECK(rdss_verify(g, c) == RDSS_OK);
    rdss_code_free(c);
    rdss_graph_free(g);

    CHECK(run("capacity", "k5.graph").report["result"]["dimension"] == 4.0);
    CHECK(run("capacity", "edgeless3.graph").report["result"]["dimension"] == 0.0);
    auto capped = run("capacity", "pentagon.graph", nullptr, {{"state_cap", "8"}});
    CHECK(capped.status == RDSS_CAP_EXCEEDED);
    CHECK(capped.report["result"]["exact"] == false);
    CHECK(capped.report["result"]["bounds"]["lower"] == 2.0);
    CHECK(!capped.report["notices"].empty());
    CHECK(rdss_result_artifact_count(capped.result.get()) == 0);
    auto bounds_only = run("capacity", "pentagon.graph", nullptr, {{"exact", "0"}});
    CHECK(bounds_only.status == RDSS_OK);
    CHECK(bounds_only.report["result"]["bounds"]["upper"] == 3.0);
  }

  TEST_CASE("construct command") {
    auto m = run("construct", "pentagon.graph", nullptr, {{"method", "matching"}});
    CHECK(m.status == RDSS_OK);
    CHECK(m.report["result"]["code"]["dimension"] == 2.0);
    auto cl = run("construct", "pentagon.graph", nullptr, {{"method", "cliques"}});
    CHECK(cl.report["result"]["code"]["dimension"] == 2.0);
    auto cyc = run("construct", "directed_triangle.graph", nullptr, {{"method", "cycles"}});
    CHECK(cyc.report["result"]["code"]["dimension"] == 1.0);
    auto lp = run("construct", "double_triangle.graph", nullptr, {{"method", "lp"}});
    CHECK(lp.status == RDSS_OK);
    CHECK(lp.report["result"]["K"]["exact"] == "1");
    CHECK(lp.report["result"]["p"] == "2");
    CHECK(lp.report["result"]["pK"] == 2);
    CHECK(lp.report["result"]["max_load"] == 2);
    CHECK(lp.report["result"]["repair_ok"] == true);
    CHECK(std::string(rdss_result_artifact_content(lp.result.get(), 0)).rfind("v rdss 5 2 2 1 1\n", 0) == 0);

    CHECK(run("construct", "pentagon.graph", nullptr, {{"method", "lp"}}).status == RDSS_USAGE);
    CHECK(run("construct", "directed_triangle.graph", nullptr, {{"method", "matching"}}).status == RDSS_USAGE);
    CHECK(run("construct", "pentagon.graph").status == RDSS_USAGE);
    CHECK(run("construct", "pentagon.graph", nullptr, {{"method", "magic"}}).status == RDSS_USAGE);
  }

  TEST_CASE("verify command") {
    auto ok = run("verify", "pentagon.graph", "pentagon.code");
    CHECK(ok.status == RDSS_OK);
    CHECK(ok.report["result"]["ok"] == true);
    auto bad = run("verify", "pentagon.graph", "pentagon_bad.code");
    CHECK(bad.status == RDSS_VERIFY_FAILED);
    CHECK(bad.report["result"]["witness"]["vertex"] == 0);
    auto coop = run("verify", "p3.graph", "p3_replication.code", {{"coop_t", "2"}});
    CHECK(coop.status == RDSS_OK);
    CHECK(coop.report["result"]["cooperative"]["ok"] == true);
    auto dist = run("verify", "pentagon.graph", "pentagon.code", {{"distance", "2"}});
    CHECK(dist.status == RDSS_OK);
    CHECK(dist.report["result"]["distance"]["min_distance"] == 2);
    CHECK(dist.report["result"]["distance"]["distance_bound"]["consistent"] == true);
    CHECK(dist.report["result"]["distance"]["alpha_bound"]["consistent"] == true);
    auto far = run("verify", "pentagon.graph", "pentagon.code", {{"distance", "3"}});
    CHECK(far.status == RDSS_VERIFY_FAILED);
    CHECK(far.report["result"]["distance"]["meets"] == false);
    CHECK(run("verify", "pentagon.graph").status == RDSS_USAGE);
    CHECK(run("verify", "c4.graph", "pentagon.code").status == RDSS_PARSE_ERROR);
    CHECK(run("verify", "directed_triangle.graph", "p3_replication.code", {{"coop_t", "2"}}).status == RDSS_USAGE);
  }

  TEST_CASE("minrank command") {
    auto p = run("minrank", "pentagon.graph");
    CHECK(p.report["result"]["minrank"] == 3);
    CHECK(p.report["result"]["witness"].size() == 5);
    CHECK(run("minrank", "k4.graph").report["result"]["minrank"] == 1);
    CHECK(run("minrank", "edgeless3.graph").report["result"]["minrank"] == 3);
    CHECK(run("minrank", "pentagon.graph", nullptr, {{"q", "6"}}).status == RDSS_USAGE);
    CHECK(run("minrank", "pentagon.graph", nullptr, {{"minrank_cap", "4"}}).status == RDSS_CAP_EXCEEDED);
  }

  TEST_CASE("dualize command") {
    auto p = run("dualize", "pentagon.graph", "pentagon.code");
    CHECK(p.status == RDSS_OK);
    const auto& r = p.report["result"];
    CHECK(r["generator_count"].get<int>() <= 5);
    CHECK(r["generator_count"].get<int>() <= r["generator_bound"].get<int>());
    CHECK(r["round_trip"] == true);
    CHECK(r["within_bound"] == true);
    CHECK(r["index_length"].get<double>() <= r["length_bound"].get<double>() + 1e-9);
    CHECK(!r.contains("syndrome"));
    REQUIRE(rdss_result_artifact_count(p.result.get()) == 1);
    CHECK(std::string(rdss_result_artifact_content(p.result.get(), 0)).rfind("g ", 0) == 0);

    auto lin = run("dualize", "pentagon.graph", "pentagon_linear.code");
    CHECK(lin.status == RDSS_OK);
    CHECK(lin.report["result"]["syndrome"]["length"] == 3);
    CHECK(lin.report["result"]["syndrome"]["round_trip"] == true);
    CHECK(lin.report["result"]["round_trip"] == true);

    CHECK(run("dualize", "pentagon.graph", "pentagon_bad.code").status == RDSS_VERIFY_FAILED);
    CHECK(run("dualize", "edgeless3.graph", "whole_space3.code").status == RDSS_VERIFY_FAILED);
    CHECK(run("dualize", "pentagon.graph").status == RDSS_USAGE);
  }

  TEST_CASE("parse errors through commands") {
    rdss_result* raw = nullptr;
    CHECK(rdss_run("bounds", "p rdss 2 1 x\ne 0 1\n", nullptr, nullptr, &raw) == RDSS_PARSE_ERROR);
    Result r(raw, rdss_result_free);
    auto rep = json::parse(rdss_result_report(r.get()));
    CHECK(rep["error"].get<std::string>().find("line 1") != std::string::npos);
    CHECK(rep["status"] == 2);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("exit codes") {
    std::string out;
    CHECK(cli("bounds " + file("pentagon.graph"), &out) == 0);
    CHECK(json::parse(out)["result"]["upper"] == 3.0);
    CHECK(cli("verify " + file("pentagon.graph") + " " + file("pentagon_bad.code")) == 1);
    CHECK(cli("bounds " + file("missing.graph")) == 2);
    CHECK(cli("capacity " + file("pentagon.graph") + " --state-cap 8") == 4);
    CHECK(cli("construct " + file("pentagon.graph") + " --method lp") == 5);
    CHECK(cli("bounds " + file("pentagon.graph") + " --no-such-flag") == 5);
    CHECK(cli("") == 5);
    CHECK(cli("bounds " + file("pentagon.graph") + " --subset-cap 2 --state-cap 8") == 3);
  }

  TEST_CASE("flags, environment and artifacts") {
    std::string out;
    CHECK(cli("minrank " + file("pentagon.graph"), &out, "RDSS_Q=3") == 0);
    CHECK(json::parse(out)["command"]["options"]["q"] == 3);
    CHECK(cli("minrank " + file("pentagon.graph") + " --q 2", &out, "RDSS_Q=3") == 0);
    CHECK(json::parse(out)["command"]["options"]["q"] == 2);
    CHECK(cli("bounds " + file("pentagon.graph") + " --timing", &out) == 0);
    CHECK(json::parse(out).contains("timing"));
    CHECK(cli("bounds " + file("pentagon.graph") + " --threads 2 --cycle-cap 50", &out) == 0);
    CHECK(json::parse(out)["command"]["options"]["limits"]["threads"] == 2);

    auto dir = std::filesystem::temp_directory_path() / "rdss_cli_test_out";
    std::filesystem::remove_all(dir);
    CHECK(cli("capacity " + file("pentagon.graph") + " --out " + dir.string()) == 0);
    CHECK(cli("verify " + file("pentagon.graph") + " " + (dir / "capacity.code").string()) == 0);
    CHECK(cli("construct " + file("double_triangle.graph") + " --method lp --out " + dir.string()) == 0);
    CHECK(std::filesystem::exists(dir / "lp.vcode"));
    CHECK(cli("dualize " + file("pentagon.graph") + " " + file("pentagon.code") + " --out " + dir.string()) == 0);
    CHECK(std::filesystem::exists(dir / "covering.txt"));
    std::filesystem::remove_all(dir);
  }
}
