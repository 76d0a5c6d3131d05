/* Public C interface to the poset / probability-functions-polytope library.
 *
 * All functions return a pp_status; results are handed back through out
 * parameters. Strings returned through char** are owned by the library and
 * must be released with pp_string_free. Poset handles are opaque and must
 * be released with pp_poset_free. On any non-zero status, pp_last_error()
 * returns a thread-local description of what went wrong.
 */
#ifndef POSETPOLY_H
#define POSETPOLY_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pp_poset pp_poset;

typedef enum pp_status {
    PP_OK = 0,
    PP_ERR_INTERNAL = 1,
    PP_ERR_VALIDATION = 2, /* parse errors, bad arguments, broken invariants */
    PP_ERR_GEOMETRY = 3,   /* infeasible or unbounded polyhedral systems */
    PP_ERR_SCALE = 4       /* a configured size or time cap was exceeded */
} pp_status;

const char* pp_last_error(void);
void pp_string_free(char* s);

/* Construction. Covers are given as 2*ncovers ints (a0,b0,a1,b1,...). */
pp_status pp_poset_from_covers(int n, const int* covers, size_t ncovers, pp_poset** out);
/* Text or JSON, auto-detected; see the documented file formats. */
pp_status pp_poset_parse(const char* text, pp_poset** out);
/* diamond, pentagon, c2c3, c2c4, c2c2c2, chainN, antichainN. */
pp_status pp_poset_builtin(const char* name, pp_poset** out);
void pp_poset_free(pp_poset* p);

int pp_poset_size(const pp_poset* p);

/* Reports. `format` is one of "json", "dot", "csv", "ine", "ext"; each verb
 * accepts the subset documented in the README. */
pp_status pp_report_poset(const pp_poset* p, const char* format, char** out);
pp_status pp_report_derive(const pp_poset* p, const char* format, char** out);
pp_status pp_report_prob(const pp_poset* p, const char* format, char** out);
pp_status pp_report_polytope(const pp_poset* p, const char* format, char** out);
pp_status pp_report_prp(const pp_poset* p, const char* format, char** out);

/* Scan over all poset classes with up to max_n elements. resume_jsonl may be
 * NULL or the content of a previous report; matching records are reused.
 * threads <= 0 picks POSET_POLY_THREADS or the hardware count. The output is
 * one JSON record per line. include_timings adds wall-clock fields (making
 * the output non-reproducible byte for byte). */
pp_status pp_scan(int max_n, double time_budget_seconds, const char* resume_jsonl, int threads,
                  int include_timings, char** out_jsonl);

/* Catalogue of every class of the given size (3 or 4) with Hasse diagrams,
 * polytope edge graph and f-vector, as JSON. */
pp_status pp_catalogue(int n, char** out_json);

/* Worst-case balance constant over all classes with up to max_n elements. */
pp_status pp_balance_scan(int max_n, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
