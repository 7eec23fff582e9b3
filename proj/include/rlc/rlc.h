/* rlc - step-up triple colorings: construction, lazy evaluation, and
 * desk-scale verification that every n-element subset of the universe shows
 * at least t distinct colors.
 *
 * C API conventions:
 *   - every function returns rlc_status; results travel through out-params
 *   - handles are opaque and freed with the matching *_free function
 *   - strings returned by the library are freed with rlc_string_free
 *   - big integers cross the boundary as decimal strings
 *   - on failure, rlc_last_error() describes the most recent error in the
 *     calling thread
 */

#ifndef RLC_H
#define RLC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rlc_status {
  RLC_OK = 0,
  RLC_ERROR_INVALID_ARGUMENT = 1,
  RLC_ERROR_INFEASIBLE_SPEC = 2,
  RLC_ERROR_ATTEMPTS_EXHAUSTED = 3,
  RLC_ERROR_BUDGET_EXCEEDED = 4,
  RLC_ERROR_EQUAL_VERTICES = 5,
  RLC_ERROR_OUT_OF_UNIVERSE = 6,
  RLC_ERROR_SUBSET_TOO_SMALL = 7,
  RLC_ERROR_NOT_POWER_OF_TWO = 8,
  RLC_ERROR_CHAIN_TOO_SHORT = 9,
  RLC_ERROR_UNIVERSE_TOO_LARGE = 10,
  RLC_ERROR_DEPTH_EXCEEDED = 11,
  RLC_ERROR_FORMAT = 12,
  RLC_ERROR_IO = 13,
  RLC_ERROR_UNSUPPORTED = 14,
  RLC_ERROR_INTERNAL = 15
} rlc_status;

const char* rlc_status_name(rlc_status status);
/* Message for the most recent failure in this thread. */
const char* rlc_last_error(void);
void rlc_string_free(char* s);

/* Opaque handles. */
typedef struct rlc_pair_coloring rlc_pair_coloring;     /* explicit pair coloring */
typedef struct rlc_triple_coloring rlc_triple_coloring; /* explicit triple coloring */
typedef struct rlc_tree rlc_tree;                       /* construction tree */
typedef struct rlc_report rlc_report;                   /* verification report */

void rlc_pair_coloring_free(rlc_pair_coloring* h);
void rlc_triple_coloring_free(rlc_triple_coloring* h);
void rlc_tree_free(rlc_tree* h);
void rlc_report_free(rlc_report* h);

/* ------------------------------------------------------------------------ */
/* Base-coloring generation and the first-moment calculations behind it      */

/* Seeded rejection sampling; the result is exhaustively verified to give
 * every subset of `subset_size` vertices at least `required_colors` distinct
 * colors before it is returned. */
rlc_status rlc_generate_pair(uint64_t num_vertices, uint32_t num_colors,
                             uint32_t subset_size, uint32_t required_colors,
                             uint64_t seed, uint64_t max_attempts,
                             uint64_t budget, int allow_vacuous,
                             rlc_pair_coloring** out);
rlc_status rlc_generate_triple(uint64_t num_vertices, uint32_t num_colors,
                               uint32_t subset_size, uint32_t required_colors,
                               uint64_t seed, uint64_t max_attempts,
                               uint64_t budget, int allow_vacuous,
                               rlc_triple_coloring** out);

/* floor((q/(t-1))^(m/4)), floor(2^(r^2/24)), floor(2^(s/4)); exact. */
rlc_status rlc_pair_universe_size(uint32_t q, uint32_t t, uint32_t m,
                                  char** out_decimal);
rlc_status rlc_lemma31_universe_size(uint32_t r, char** out_decimal);
rlc_status rlc_lemma33_universe_size(uint32_t s, char** out_decimal);

/* Exact first moment of the number of bad m-subsets, its closed-form ceiling,
 * and the exact comparison between the two. universe_decimal may be NULL to
 * use the formula size. Any out-param may be NULL. */
rlc_status rlc_expected_bad_subsets(uint32_t q, uint32_t t, uint32_t m,
                                    const char* universe_decimal,
                                    char** out_exact_rational,
                                    char** out_bound_decimal,
                                    int* out_exact_le_bound);
/* Smallest m whose exact first moment at the formula universe drops below 1. */
rlc_status rlc_min_m_for_bound(uint32_t q, uint32_t t, uint32_t* out_m);

/* ------------------------------------------------------------------------ */
/* Explicit colorings: accessors and RLC1 serialization                       */

rlc_status rlc_pair_num_vertices(const rlc_pair_coloring* h, uint64_t* out);
rlc_status rlc_pair_num_colors(const rlc_pair_coloring* h, uint32_t* out);
rlc_status rlc_pair_color(const rlc_pair_coloring* h, uint64_t i, uint64_t j,
                          uint32_t* out);
rlc_status rlc_pair_serialize(const rlc_pair_coloring* h, char** out_text);
rlc_status rlc_pair_parse(const char* text, rlc_pair_coloring** out);
rlc_status rlc_pair_read_file(const char* path, rlc_pair_coloring** out);
rlc_status rlc_pair_write_file(const rlc_pair_coloring* h, const char* path);

rlc_status rlc_triple_num_vertices(const rlc_triple_coloring* h, uint64_t* out);
rlc_status rlc_triple_num_colors(const rlc_triple_coloring* h, uint32_t* out);
rlc_status rlc_triple_color(const rlc_triple_coloring* h, uint64_t i,
                            uint64_t j, uint64_t k, uint32_t* out);
rlc_status rlc_triple_serialize(const rlc_triple_coloring* h, char** out_text);
rlc_status rlc_triple_parse(const char* text, rlc_triple_coloring** out);
rlc_status rlc_triple_read_file(const char* path, rlc_triple_coloring** out);
rlc_status rlc_triple_write_file(const rlc_triple_coloring* h,
                                 const char* path);

/* ------------------------------------------------------------------------ */
/* Construction trees                                                         */

rlc_status rlc_tree_explicit(const rlc_triple_coloring* leaf, rlc_tree** out);
rlc_status rlc_tree_binary_stepup(const rlc_pair_coloring* base,
                                  rlc_tree** out);
rlc_status rlc_tree_mixed_stepup(const rlc_pair_coloring* pair_base,
                                 const rlc_tree* triple_base, rlc_tree** out);

/* Reads a tree document or a bare RLC1 triple coloring. */
rlc_status rlc_tree_read_file(const char* path, rlc_tree** out);
/* Writes a self-contained document with all bases inlined. */
rlc_status rlc_tree_write_file(const rlc_tree* h, const char* path);
/* Reference-style documents recording base paths plus content hashes. */
rlc_status rlc_tree_write_binary_ref(const char* pair_path,
                                     const char* out_path);
rlc_status rlc_tree_write_mixed_ref(const char* pair_path,
                                    const char* triple_path,
                                    const char* out_path);

/* Loads any coloring file: RLC1 pair, RLC1 triple, or tree document.
 * Exactly one of *out_tree / *out_pair is set. */
rlc_status rlc_load_coloring(const char* path, rlc_tree** out_tree,
                             rlc_pair_coloring** out_pair);

typedef enum rlc_tree_kind {
  RLC_TREE_EXPLICIT = 0,
  RLC_TREE_BINARY_STEPUP = 1,
  RLC_TREE_MIXED_STEPUP = 2
} rlc_tree_kind;

rlc_status rlc_tree_get_kind(const rlc_tree* h, rlc_tree_kind* out);
rlc_status rlc_tree_num_colors(const rlc_tree* h, uint32_t* out);
rlc_status rlc_tree_depth(const rlc_tree* h, uint32_t* out);
rlc_status rlc_tree_universe_size(const rlc_tree* h, char** out_decimal);
/* Color of an unordered triple of distinct vertices (decimal strings). */
rlc_status rlc_tree_eval(const rlc_tree* h, const char* v1, const char* v2,
                         const char* v3, uint32_t* out_color);

/* ------------------------------------------------------------------------ */
/* Composition and bounds                                                     */

typedef struct rlc_compose_options {
  uint64_t seed;
  uint64_t pair_vertices; /* 0 = formula value */
  uint64_t pair_subset;   /* 0 = formula value */
  uint64_t leaf_vertices; /* 0 = formula value */
  uint64_t leaf_subset;   /* 0 = formula value */
  uint64_t max_attempts;  /* 0 = default */
  uint64_t budget;        /* 0 = default */
} rlc_compose_options;

/* Builds the full construction tree for (n, q); every generated base is
 * exhaustively verified. */
rlc_status rlc_compose(uint64_t n, uint32_t q, const rlc_compose_options* opt,
                       rlc_tree** out);
/* Formula-scale plan (sizes and exponents only), as a JSON document. */
rlc_status rlc_compose_nominal(uint64_t n, uint32_t q, char** out_json);

/* log2 of the guaranteed universe size. out_exact_rational is set to NULL
 * when the value is irrational; out_decimal always carries 50 significant
 * digits. */
rlc_status rlc_bound_log2(const char* n_decimal, uint32_t q,
                          char** out_exact_rational, char** out_decimal);
rlc_status rlc_bound_log2_simple(const char* n_decimal, uint32_t q, uint32_t t,
                                 int allow_general, char** out_exact_rational,
                                 char** out_decimal);

/* ------------------------------------------------------------------------ */
/* Verification                                                               */

rlc_status rlc_verify_tree_exhaustive(const rlc_tree* h, uint32_t n,
                                      uint32_t t, uint64_t budget,
                                      uint32_t workers, rlc_report** out);
/* Same check restricted to an explicit strictly increasing vertex list. */
rlc_status rlc_verify_tree_exhaustive_list(const rlc_tree* h,
                                           const char* const* vertices,
                                           size_t count, uint32_t n, uint32_t t,
                                           uint64_t budget, uint32_t workers,
                                           rlc_report** out);
rlc_status rlc_verify_tree_sampled(const rlc_tree* h, uint32_t n, uint32_t t,
                                   uint64_t samples, uint64_t seed,
                                   uint64_t budget, uint32_t workers,
                                   rlc_report** out);
rlc_status rlc_verify_pair_exhaustive(const rlc_pair_coloring* h, uint32_t m,
                                      uint32_t t, uint64_t budget,
                                      uint32_t workers, rlc_report** out);
rlc_status rlc_verify_pair_sampled(const rlc_pair_coloring* h, uint32_t m,
                                   uint32_t t, uint64_t samples, uint64_t seed,
                                   uint64_t budget, uint32_t workers,
                                   rlc_report** out);

/* Distinct colors over all triples of a strictly increasing vertex list. */
rlc_status rlc_min_colors(const rlc_tree* h, const char* const* vertices,
                          size_t count, uint32_t* out);

/* Structural properties of the delta map: 1 = consecutive deltas of a sorted
 * triple are distinct (binary universes); 2 = the endpoint delta of a chain
 * equals the max of its consecutive deltas; 3 = digits at a repeated delta
 * position strictly increase. */
rlc_status rlc_property_check(uint32_t property, const char* radix_decimal,
                              uint64_t num_digits, int exhaustive,
                              uint64_t samples, uint64_t chain_length,
                              uint64_t seed, uint64_t budget, rlc_report** out);

/* Report accessors. */
rlc_status rlc_report_mode(const rlc_report* h, int* out_sampled);
rlc_status rlc_report_pass(const rlc_report* h, int* out_pass);
rlc_status rlc_report_subsets_checked(const rlc_report* h, uint64_t* out);
rlc_status rlc_report_evaluations(const rlc_report* h, uint64_t* out);
rlc_status rlc_report_min_colors(const rlc_report* h, uint32_t* out);
rlc_status rlc_report_counterexample_size(const rlc_report* h, size_t* out);
rlc_status rlc_report_counterexample_vertex(const rlc_report* h, size_t index,
                                            char** out_decimal);
rlc_status rlc_report_to_json(const rlc_report* h, char** out_json);

/* ------------------------------------------------------------------------ */
/* Chain extraction                                                           */

/* Runs the stepdown recursion on a strictly increasing chain (decimal vertex
 * strings) over a binary step-up tree; the chain length must be a power of
 * two. Returns a JSON document listing the realized delta set and the
 * evaluation-validated pair witnesses. */
rlc_status rlc_stepdown_extract(const rlc_tree* h, const char* const* chain,
                                size_t count, char** out_json);

/* Smallest w with delta(v_0, v_w) > delta(v_w, v_{w+1}), scanning w <= r-1;
 * *out_w = -1 when there is no escape. Vertices are digit codes over the
 * given radix/width. */
rlc_status rlc_equal_delta_escape(const char* radix_decimal,
                                  uint64_t num_digits,
                                  const char* const* chain, size_t count,
                                  uint64_t r, int64_t* out_w);

/* Iterated escape search building a strictly decreasing delta sequence over
 * s-1 blocks of r vertices (mirrored = the symmetric increasing variant).
 * Returns a JSON document with either the positions or the failure block. */
rlc_status rlc_chain_extract(const char* radix_decimal, uint64_t num_digits,
                             const char* const* chain, size_t count, uint64_t r,
                             uint64_t s, int mirrored, char** out_json);

/* ------------------------------------------------------------------------ */
/* Oracle                                                                     */

rlc_status rlc_materialize(const rlc_tree* h, uint64_t limit,
                           rlc_triple_coloring** out);

/* Exhaustive existence search; *out_sat is 1/0. On Sat the witness handle for
 * the matching arity is set if the out-param is non-NULL. */
rlc_status rlc_oracle_search(uint64_t universe, uint32_t q, uint32_t t,
                             uint32_t n, uint32_t arity, uint64_t budget,
                             uint64_t order_seed, int* out_sat,
                             rlc_pair_coloring** out_pair,
                             rlc_triple_coloring** out_triple);

/* Largest Sat universe size in [n, n_max] for triple colorings. *out_found is
 * 0 when already Unsat at n; *out_capped is 1 when still Sat at n_max. */
rlc_status rlc_oracle_exact_f(uint32_t q, uint32_t t, uint32_t n,
                              uint64_t n_max, uint64_t budget, int* out_found,
                              uint64_t* out_best, int* out_capped,
                              rlc_triple_coloring** out_witness);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RLC_H */
