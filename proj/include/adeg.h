/* adeg — signed-graph ADE classification engine.
 *
 * C API over the C++ core: opaque handles, integer status codes, string
 * results. All strings returned through adeg_result accessors stay owned by
 * the result handle and live until adeg_result_free.
 */
#ifndef ADEG_H
#define ADEG_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct adeg_graph adeg_graph;
typedef struct adeg_plane adeg_plane;
typedef struct adeg_result adeg_result;

/* Status codes double as CLI exit codes. */
typedef enum {
    ADEG_OK = 0,
    ADEG_ERR_ARG = 1,          /* null/invalid handle or argument */
    ADEG_ERR_PARSE = 2,        /* unreadable input */
    ADEG_ERR_INVALID = 3,      /* input violates an invariant */
    ADEG_ERR_NOT_POSITIVE = 4, /* positivity-requiring command on a non-positive input */
    ADEG_ERR_EXHAUSTED = 5,    /* internal search exhaustion */
} adeg_status;

const char* adeg_version(void);

/* Thread-local message for the last failing call. */
const char* adeg_last_error(void);

/* ------------------------------------------------------------------ graphs */

adeg_status adeg_graph_parse(const char* text, adeg_graph** out);
adeg_status adeg_graph_to_text(const adeg_graph* g, adeg_result** out);
adeg_status adeg_graph_to_dot(const adeg_graph* g, const char* name, adeg_result** out);
void adeg_graph_free(adeg_graph* g);

adeg_status adeg_plane_parse(const char* text, adeg_plane** out);
void adeg_plane_free(adeg_plane* p);

/* ----------------------------------------------------------------- results */

/* Every command produces a result handle carrying a human-readable rendering,
 * a stable JSON rendering, optional DOT renderings, and the exit code the CLI
 * should use. */
int adeg_result_exit_code(const adeg_result* r);
const char* adeg_result_text(const adeg_result* r);
const char* adeg_result_json(const adeg_result* r);
const char* adeg_result_dot_start(const adeg_result* r); /* NULL when absent */
const char* adeg_result_dot_end(const adeg_result* r);   /* NULL when absent */
void adeg_result_free(adeg_result* r);

/* ---------------------------------------------------------------- commands */

/* mode: "t" | "tprime". emit_certificate: include U in the JSON transcript. */
adeg_status adeg_reduce(const adeg_graph* g, const char* mode, int emit_certificate,
                        adeg_result** out);
adeg_status adeg_classify(const adeg_graph* g, adeg_result** out);

/* Replays a transcript JSON document and verifies its certificate. */
adeg_status adeg_verify_transcript(const char* json_text, adeg_result** out);

adeg_status adeg_mine_minors(int max_n, adeg_result** out);

/* braid word text, e.g. "s1 s1 s1" or "1 2 1 2". */
adeg_status adeg_braid_analyze(const char* word, int reduce, adeg_result** out);

adeg_status adeg_checkerboard_validate(const adeg_plane* p, adeg_result** out);
adeg_status adeg_checkerboard_reduce(const adeg_plane* p, int emit_certificate,
                                     adeg_result** out);

/* suite: "definiteness" | "equivalence" | "lemma33" | "degree6" | "coherence".
 * max_n <= 0 picks the suite default. */
adeg_status adeg_oracle(const char* suite, int max_n, adeg_result** out);

#ifdef __cplusplus
}
#endif

#endif /* ADEG_H */
