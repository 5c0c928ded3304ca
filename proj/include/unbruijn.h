/* unbruijn: unoriented de Bruijn sequences, graphs, and covers.
 *
 * C API over the C++ core.  Every function returns UNB_OK (0) on success or
 * a nonzero status; on failure unb_last_error() carries a message for the
 * calling thread.  Strings returned through char** out-parameters are
 * malloc'd and must be released with unb_string_free().  Graph handles are
 * opaque and released with unb_graph_free().
 */
#ifndef UNBRUIJN_H
#define UNBRUIJN_H

#include <stdint.h>

#if defined(_WIN32)
#  ifdef UNB_BUILD
#    define UNB_API __declspec(dllexport)
#  else
#    define UNB_API __declspec(dllimport)
#  endif
#else
#  define UNB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum unb_status {
  UNB_OK = 0,
  UNB_ERR_INVALID = 1,  /* bad argument, unknown vertex/edge, precondition */
  UNB_ERR_OVERFLOW = 2, /* exact integer arithmetic would overflow */
  UNB_ERR_LIMIT = 3,    /* size cap or search budget exceeded */
  UNB_ERR_INTERNAL = 4
};

typedef struct unb_graph unb_graph; /* unoriented de Bruijn graph uBg(k,n) */

UNB_API const char* unb_version(void);

/* Message for the last failure on this thread, or NULL if none. */
UNB_API const char* unb_last_error(void);

UNB_API void unb_string_free(char* s);

/* Closed forms.  Pass size_cap = 0 anywhere below for the default cap. */
UNB_API int unb_optimal_length(int k, int n, uint64_t* out);       /* l(k,n) */
UNB_API int unb_ov_count(int k, int n, uint64_t* out);             /* odd-vertex count of uBg(k,n) */
UNB_API int unb_optimal_exists(int k, int n, int* out);            /* 1 iff optimal length attainable */
UNB_API int unb_bound_extra(int k, int n, uint64_t* out);          /* (n-1)(ov/2 - 1), 0 when ov <= 2 */
UNB_API int unb_upper_bound_length(int k, int n, uint64_t* out);   /* l + bound_extra; needs ov > 2 */
UNB_API int unb_ratio(int k, int n, uint64_t* num, uint64_t* den); /* reduced r(k,n) */

/* Sequence generation and verification; results are JSON documents. */
UNB_API int unb_generate(int k, int n, uint64_t size_cap, char** json_out);
UNB_API int unb_generate_word(int k, int n, uint64_t size_cap, char** word_out);
UNB_API int unb_verify(const char* word, int k, int n, uint64_t size_cap, char** json_out);
/* Convenience flags for exit-code style checks. */
UNB_API int unb_verify_flags(const char* word, int k, int n, uint64_t size_cap,
                     int* is_cover, int* is_optimal);

/* Exhaustive minimal-cover search (node_budget = 0 for the default). */
UNB_API int unb_search_min_cover(int k, int n, uint64_t node_budget, char** json_out);

/* Graph handles. */
UNB_API int unb_graph_build(int k, int n, uint64_t size_cap, unb_graph** out);
UNB_API void unb_graph_free(unb_graph* g);
UNB_API int unb_graph_counts(const unb_graph* g, uint64_t* vertices, uint64_t* edges,
                     uint64_t* odd_vertices);
UNB_API int unb_graph_dot(const unb_graph* g, char** dot_out);
UNB_API int unb_graph_eulerization(const unb_graph* g, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* UNBRUIJN_H */
