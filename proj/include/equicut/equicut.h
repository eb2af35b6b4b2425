#ifndef EQUICUT_EQUICUT_H
#define EQUICUT_EQUICUT_H

/* C interface to the equicut core. Handles are opaque and owned by the
 * caller; every `char*` output is allocated by the library and released with
 * eqc_string_free. On failure a function returns a nonzero status and the
 * message is available from eqc_last_error on the same thread. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EQC_API __declspec(dllexport)
#else
#define EQC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eqc_status {
  EQC_OK = 0,
  EQC_ERR_PARSE = 1,
  EQC_ERR_NEGATIVE_RADICAND = 2,
  EQC_ERR_DIVISION_BY_ZERO = 3,
  EQC_ERR_FACTORIZATION_BOUND = 4,
  EQC_ERR_INVALID_ARGUMENT = 5,
  EQC_ERR_DEGENERATE = 6,
  EQC_ERR_LENGTH_MISMATCH = 7,
  EQC_ERR_IO = 8,
  EQC_ERR_NULL_ARGUMENT = 9,
  EQC_ERR_INTERNAL = 10
} eqc_status;

typedef enum eqc_sample_mode { EQC_SAMPLE_UNIFORM_M = 0, EQC_SAMPLE_UNIFORM_N = 1 } eqc_sample_mode;

typedef struct eqc_triangle eqc_triangle;
typedef struct eqc_dissection eqc_dissection;
typedef struct eqc_search eqc_search;
typedef struct eqc_region eqc_region;

EQC_API const char* eqc_version(void);
EQC_API const char* eqc_status_name(eqc_status status);
/* Message of the last failure on this thread; empty after a success. */
EQC_API const char* eqc_last_error(void);
EQC_API void eqc_string_free(char* s);

/* Triangles with sides (a, b, 1). */
EQC_API eqc_status eqc_triangle_parse(const char* a, const char* b, eqc_triangle** out);
/* `attempts` may be NULL. Sampled triangles are numeric. */
EQC_API eqc_status eqc_triangle_sample(uint64_t seed, eqc_sample_mode mode, eqc_triangle** out, uint64_t* attempts);
EQC_API void eqc_triangle_free(eqc_triangle* t);
EQC_API int eqc_triangle_is_exact(const eqc_triangle* t);
/* JSON with the sides, tier, angles in degrees and exact cosines. */
EQC_API eqc_status eqc_triangle_describe(const eqc_triangle* t, char** json);

/* Angle and side relation reports as one JSON object. `basis` lists the
 * squarefree radicands for side coefficients. */
EQC_API eqc_status eqc_analyze(const eqc_triangle* t, int angle_height, int side_height, const long* basis,
                               size_t basis_len, long precision_bits, char** json);

EQC_API eqc_status eqc_standard_dissection(const eqc_triangle* t, unsigned n, eqc_dissection** out);
EQC_API eqc_status eqc_dissection_from_json(const char* text, eqc_dissection** out);
EQC_API eqc_status eqc_dissection_to_json(const eqc_dissection* d, char** out);
EQC_API eqc_status eqc_dissection_to_svg(const eqc_dissection* d, char** out);
EQC_API size_t eqc_dissection_piece_count(const eqc_dissection* d);
EQC_API void eqc_dissection_free(eqc_dissection* d);
/* `valid` receives 1 or 0; `json` (may be NULL) receives the failure list. */
EQC_API eqc_status eqc_dissection_verify(const eqc_dissection* d, int direct_only, int* valid, char** json);
/* `reason` may be NULL. */
EQC_API eqc_status eqc_dissection_is_standard(const eqc_dissection* d, int* standard, char** reason);

typedef struct eqc_search_options {
  size_t pieces;
  int allow_reflections;
  int symmetry_quotient;
  uint64_t max_nodes;    /* 0: unlimited */
  uint64_t max_results;  /* 0: unlimited */
  uint64_t time_budget_ms; /* 0: unlimited */
  unsigned workers;      /* 0: hardware concurrency */
} eqc_search_options;

EQC_API void eqc_search_options_default(eqc_search_options* options);
/* Searches with the similar tile and each extra tile. An extra tile is the
 * string "s1,s2,s3" of number literals in counterclockwise order. */
EQC_API eqc_status eqc_search_run(const eqc_triangle* region, const eqc_search_options* options,
                                  const char* const* extra_tiles, size_t extra_count, eqc_search** out);
EQC_API size_t eqc_search_run_count(const eqc_search* s);
/* JSON: label, tile, skipped, notice, complete, nodes, candidates, count. */
EQC_API eqc_status eqc_search_run_summary(const eqc_search* s, size_t run, char** json);
EQC_API size_t eqc_search_dissection_count(const eqc_search* s, size_t run);
/* A copy owned by the caller. */
EQC_API eqc_status eqc_search_dissection(const eqc_search* s, size_t run, size_t index, eqc_dissection** out);
EQC_API void eqc_search_free(eqc_search* s);

/* Lattice regions in the `row col up|down` text format. */
EQC_API eqc_status eqc_region_parse(const char* text, eqc_region** out);
EQC_API void eqc_region_free(eqc_region* r);
/* JSON: loops with vertices, steps, turning and lemma pattern, plus
 * edge connectivity and simple connectivity. */
EQC_API eqc_status eqc_region_boundary(const eqc_region* r, char** json);
/* Rendered on the given triangle, or the equilateral one when NULL. */
EQC_API eqc_status eqc_region_svg(const eqc_region* r, const eqc_triangle* t, char** svg);

#ifdef __cplusplus
}
#endif

#endif
