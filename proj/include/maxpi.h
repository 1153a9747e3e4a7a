/* maxpi — exact maximum induced Pi-subgraph solver.
 *
 * C interface to the solver core. All functions return a maxpi_status;
 * results come back through opaque handles that must be released with the
 * matching *_free call. maxpi_last_error() describes the most recent failure
 * on the calling thread.
 */
#ifndef MAXPI_H
#define MAXPI_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum maxpi_status {
    MAXPI_OK = 0,
    MAXPI_ERR_INVALID_ARGUMENT = 1,
    MAXPI_ERR_PARSE = 2,
    MAXPI_ERR_CONSTANTS = 3,
    MAXPI_ERR_CAP_EXCEEDED = 4,
    MAXPI_ERR_UNSUPPORTED = 5,
    MAXPI_ERR_INTERNAL = 6
} maxpi_status;

typedef struct maxpi_graph maxpi_graph;
typedef struct maxpi_class maxpi_class;
typedef struct maxpi_result maxpi_result;

const char* maxpi_version(void);

/* Message for the last failing call on this thread; empty string when none. */
const char* maxpi_last_error(void);

/* Line number of the last parse error on this thread, 0 when none. */
int maxpi_last_error_line(void);

/* ------------------------------------------------------------------ graphs */

/* DIMACS-like text: "p edge <n> <m>" then "e <u> <v>" lines, 1-indexed. */
maxpi_status maxpi_graph_parse(const char* text, maxpi_graph** out);

/* Programmatic construction from 0-indexed endpoint pairs u0,v0,u1,v1,... */
maxpi_status maxpi_graph_create(int n, const int* edge_pairs, int m, maxpi_graph** out);

void maxpi_graph_free(maxpi_graph* g);

int maxpi_graph_vertex_count(const maxpi_graph* g);
int maxpi_graph_edge_count(const maxpi_graph* g);

/* Formats the graph back to DIMACS-like text. Free with maxpi_string_free. */
maxpi_status maxpi_graph_format(const maxpi_graph* g, char** out_text);

/* --------------------------------------------------------------- classes */

/* name: "chordal" or "interval". */
maxpi_status maxpi_class_create(const char* name, maxpi_class** out);

/* base class restricted by a finite family of forbidden induced subgraphs. */
maxpi_status maxpi_class_with_overlay(const maxpi_class* base, const maxpi_graph* const* members,
                                      int count, maxpi_class** out);

void maxpi_class_free(maxpi_class* c);

const char* maxpi_class_name(const maxpi_class* c);

/* 1 if g belongs to the class, 0 if not, negative status on error. */
int maxpi_class_membership(const maxpi_class* c, const maxpi_graph* g);

/* Construction warnings (one per line), empty string when none. */
maxpi_status maxpi_class_warnings(const maxpi_class* c, char** out_text);

/* ---------------------------------------------------------------- solving */

typedef void (*maxpi_trace_fn)(const char* json_line, void* user);

typedef struct maxpi_solve_options {
    /* one of: auto, structured, brute, forced-B1, forced-B2 */
    const char* mode;
    /* key=value lines overriding the default constant schedule; may be NULL */
    const char* constants_text;
    int threads;
    maxpi_trace_fn trace;
    void* trace_user;
} maxpi_solve_options;

void maxpi_solve_options_init(maxpi_solve_options* opts);

/* Validates a constant schedule; returns MAXPI_OK when every constraint
 * holds, otherwise MAXPI_ERR_CONSTANTS with the violations in the error
 * message. */
maxpi_status maxpi_constants_validate(const char* constants_text);

maxpi_status maxpi_solve(const maxpi_graph* g, const maxpi_class* c, const maxpi_solve_options* opts,
                         maxpi_result** out);

/* Independent brute-force reference; refuses graphs above the cap. */
maxpi_status maxpi_oracle_solve(const maxpi_graph* g, const maxpi_class* c, int cap, maxpi_result** out);

int maxpi_result_size(const maxpi_result* r);

/* Solution vertices, 0-indexed ascending; the pointer stays valid until the
 * result handle is freed. */
maxpi_status maxpi_result_vertices(const maxpi_result* r, const int** ids, int* count);

/* Stats as a JSON object; free with maxpi_string_free. */
maxpi_status maxpi_result_stats_json(const maxpi_result* r, char** out_json);

void maxpi_result_free(maxpi_result* r);

void maxpi_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* MAXPI_H */
