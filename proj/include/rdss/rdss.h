#ifndef RDSS_RDSS_H
#define RDSS_RDSS_H

/* C interface to the rdss toolkit: storage codes on graphs, their bounds,
 * constructions and index-code duals. All handles are opaque. Functions
 * report failures through rdss_status and leave a message for
 * rdss_last_error() on the calling thread. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RDSS_API __declspec(dllexport)
#else
#define RDSS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rdss_status {
  RDSS_OK = 0,
  RDSS_VERIFY_FAILED = 1,
  RDSS_PARSE_ERROR = 2,
  RDSS_PARTIAL = 3,
  RDSS_CAP_EXCEEDED = 4,
  RDSS_USAGE = 5,
  RDSS_INTERNAL = 6
} rdss_status;

typedef struct rdss_graph rdss_graph;
typedef struct rdss_code rdss_code;
typedef struct rdss_options rdss_options;
typedef struct rdss_result rdss_result;

RDSS_API const char* rdss_version(void);
/* Message of the last failed call on this thread, "" if none. Valid until the next call. */
RDSS_API const char* rdss_last_error(void);
/* Frees strings returned through char** out-parameters. */
RDSS_API void rdss_string_free(char* s);

/* Graph file format: "p rdss <n> <m> <u|d>" then m lines "e <u> <v>". */
RDSS_API rdss_status rdss_graph_parse(const char* text, rdss_graph** out);
RDSS_API void rdss_graph_free(rdss_graph* g);
RDSS_API size_t rdss_graph_vertex_count(const rdss_graph* g);
RDSS_API size_t rdss_graph_edge_count(const rdss_graph* g);
RDSS_API int rdss_graph_directed(const rdss_graph* g);

/* Code file format: "c rdss <n> <q> <count>" then one codeword per line. */
RDSS_API rdss_status rdss_code_parse(const char* text, rdss_code** out);
RDSS_API void rdss_code_free(rdss_code* c);
RDSS_API size_t rdss_code_size(const rdss_code* c);
RDSS_API size_t rdss_code_length(const rdss_code* c);
RDSS_API unsigned rdss_code_alphabet(const rdss_code* c);
/* log_q of the code size. */
RDSS_API double rdss_code_dimension(const rdss_code* c);
RDSS_API rdss_status rdss_code_serialize(const rdss_code* c, char** out);

/* Options default to q = 2, exact search on, seed 1 and the built-in caps.
 * Keys: q, exact, method, coop_t, distance, seed, repair_trials, timing,
 * state_cap, subset_cap, cycle_cap, minrank_cap, clique_cap, aq_exact_cap, search_cap, threads. */
RDSS_API rdss_options* rdss_options_new(void);
RDSS_API void rdss_options_free(rdss_options* o);
RDSS_API rdss_status rdss_options_set(rdss_options* o, const char* key, const char* value);

/* RDSS_OK when every vertex is recoverable from its neighbors, RDSS_VERIFY_FAILED otherwise. */
RDSS_API rdss_status rdss_verify(const rdss_graph* g, const rdss_code* c);
/* Minimum rank over F_q of a matrix fitting g; q is taken from the options. */
RDSS_API rdss_status rdss_minrank(const rdss_graph* g, const rdss_options* o, size_t* rank);
/* Exact storage capacity and a largest code; `code` may be NULL. */
RDSS_API rdss_status rdss_capacity(const rdss_graph* g, const rdss_options* o, double* dimension, rdss_code** code);

/* Runs a command ("bounds", "capacity", "construct", "verify", "minrank",
 * "dualize") on file contents and returns its result; code_text may be NULL
 * for commands without a code input. The return value equals the result's
 * status. *out is set whenever it is non-NULL, also on failure. */
RDSS_API rdss_status rdss_run(const char* command, const char* graph_text, const char* code_text,
                              const rdss_options* o, rdss_result** out);
RDSS_API void rdss_result_free(rdss_result* r);
RDSS_API rdss_status rdss_result_status(const rdss_result* r);
/* JSON report, owned by the result. */
RDSS_API const char* rdss_result_report(const rdss_result* r);
RDSS_API size_t rdss_result_artifact_count(const rdss_result* r);
RDSS_API const char* rdss_result_artifact_name(const rdss_result* r, size_t i);
RDSS_API const char* rdss_result_artifact_content(const rdss_result* r, size_t i);

#ifdef __cplusplus
}
#endif

#endif
