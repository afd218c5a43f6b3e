#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "rdss/code.hpp"
#include "rdss/commands.hpp"
#include "rdss/graph.hpp"
#include "rdss/linear.hpp"
#include "rdss/rdss.h"

struct rdss_graph {
  rdss::Graph value;
};

struct rdss_code {
  rdss::Code value;
};

struct rdss_options {
  rdss::CommandOptions value;
};

struct rdss_result {
  rdss::CommandResult value;
  std::string report;
};

namespace {

thread_local std::string last_error;

rdss_status fail(rdss_status s, const std::string& what) {
  last_error = what;
  return s;
}

/// Runs body, turning exceptions into status codes.
template <class Body>
rdss_status guarded(Body&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const rdss::ParseError& e) {
    return fail(RDSS_PARSE_ERROR, e.what());
  } catch (const rdss::CapExceeded& e) {
    return fail(RDSS_CAP_EXCEEDED, e.what());
  } catch (const rdss::InvalidArgument& e) {
    return fail(RDSS_USAGE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RDSS_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RDSS_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const rdss::CommandOptions& options_or_default(const rdss_options* o) {
  static const rdss::CommandOptions defaults;
  return o ? o->value : defaults;
}

}  // namespace

extern "C" {

const char* rdss_version(void) { return rdss::tool_version; }

const char* rdss_last_error(void) { return last_error.c_str(); }

void rdss_string_free(char* s) { std::free(s); }

rdss_status rdss_graph_parse(const char* text, rdss_graph** out) {
  return guarded([&] {
    if (!text || !out) return fail(RDSS_USAGE, "null argument");
    *out = new rdss_graph{rdss::parse_graph(text)};
    return RDSS_OK;
  });
}

void rdss_graph_free(rdss_graph* g) { delete g; }
size_t rdss_graph_vertex_count(const rdss_graph* g) { return g ? g->value.vertex_count() : 0; }
size_t rdss_graph_edge_count(const rdss_graph* g) { return g ? g->value.edge_count() : 0; }
int rdss_graph_directed(const rdss_graph* g) { return g && g->value.directed() ? 1 : 0; }

rdss_status rdss_code_parse(const char* text, rdss_code** out) {
  return guarded([&] {
    if (!text || !out) return fail(RDSS_USAGE, "null argument");
    *out = new rdss_code{rdss::parse_code(text)};
    return RDSS_OK;
  });
}

void rdss_code_free(rdss_code* c) { delete c; }
size_t rdss_code_size(const rdss_code* c) { return c ? c->value.size() : 0; }
size_t rdss_code_length(const rdss_code* c) { return c ? c->value.length() : 0; }
unsigned rdss_code_alphabet(const rdss_code* c) { return c ? c->value.alphabet() : 0; }
double rdss_code_dimension(const rdss_code* c) { return c ? c->value.dimension() : 0.0; }

rdss_status rdss_code_serialize(const rdss_code* c, char** out) {
  return guarded([&] {
    if (!c || !out) return fail(RDSS_USAGE, "null argument");
    *out = copy_string(rdss::serialize_code(c->value));
    return RDSS_OK;
  });
}

rdss_options* rdss_options_new(void) { return new (std::nothrow) rdss_options{}; }
void rdss_options_free(rdss_options* o) { delete o; }

rdss_status rdss_options_set(rdss_options* o, const char* key, const char* value) {
  return guarded([&] {
    if (!o || !key || !value) return fail(RDSS_USAGE, "null argument");
    rdss::set_option(o->value, key, value);
    return RDSS_OK;
  });
}

rdss_status rdss_verify(const rdss_graph* g, const rdss_code* c) {
  return guarded([&] {
    if (!g || !c) return fail(RDSS_USAGE, "null argument");
    if (c->value.length() != g->value.vertex_count()) return fail(RDSS_PARSE_ERROR, "code length does not match the graph");
    auto check = rdss::verify_rdss(g->value, c->value);
    if (check.ok) return RDSS_OK;
    const auto& w = *check.witness;
    return fail(RDSS_VERIFY_FAILED, "vertex " + std::to_string(w.vertex) + " cannot tell " +
                                        rdss::format_word(w.x, c->value.alphabet()) + " from " +
                                        rdss::format_word(w.y, c->value.alphabet()));
  });
}

rdss_status rdss_minrank(const rdss_graph* g, const rdss_options* o, size_t* rank) {
  return guarded([&] {
    if (!g || !rank) return fail(RDSS_USAGE, "null argument");
    const auto& opts = options_or_default(o);
    *rank = rdss::minrank(g->value, opts.q, opts.limits).rank;
    return RDSS_OK;
  });
}

rdss_status rdss_capacity(const rdss_graph* g, const rdss_options* o, double* dimension, rdss_code** code) {
  return guarded([&] {
    if (!g || !dimension) return fail(RDSS_USAGE, "null argument");
    const auto& opts = options_or_default(o);
    auto cap = rdss::capacity_exact(g->value, opts.q, opts.limits);
    *dimension = cap.dimension;
    if (code) *code = new rdss_code{std::move(cap.code)};
    return RDSS_OK;
  });
}

rdss_status rdss_run(const char* command, const char* graph_text, const char* code_text, const rdss_options* o,
                     rdss_result** out) {
  return guarded([&] {
    if (out) *out = nullptr;
    if (!command || !graph_text || !out) return fail(RDSS_USAGE, "null argument");
    std::optional<std::string> code;
    if (code_text) code = code_text;
    auto* r = new rdss_result{rdss::run_command(command, graph_text, code, options_or_default(o)), {}};
    r->report = r->value.report.dump(2);
    *out = r;
    auto s = static_cast<rdss_status>(r->value.status);
    const auto& rep = r->value.report;
    if (s != RDSS_OK && rep.contains("error")) last_error = rep["error"].get<std::string>();
    else if (s != RDSS_OK && !rep["notices"].empty()) last_error = rep["notices"].front().get<std::string>();
    else if (s != RDSS_OK) last_error = rep["status_name"].get<std::string>();
    return s;
  });
}

void rdss_result_free(rdss_result* r) { delete r; }

rdss_status rdss_result_status(const rdss_result* r) {
  return r ? static_cast<rdss_status>(r->value.status) : RDSS_USAGE;
}

const char* rdss_result_report(const rdss_result* r) { return r ? r->report.c_str() : ""; }

size_t rdss_result_artifact_count(const rdss_result* r) { return r ? r->value.artifacts.size() : 0; }

const char* rdss_result_artifact_name(const rdss_result* r, size_t i) {
  return r && i < r->value.artifacts.size() ? r->value.artifacts[i].first.c_str() : nullptr;
}

const char* rdss_result_artifact_content(const rdss_result* r, size_t i) {
  return r && i < r->value.artifacts.size() ? r->value.artifacts[i].second.c_str() : nullptr;
}

}  // extern "C"
