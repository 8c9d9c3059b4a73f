/* congmonoid: non-negative integer solutions of
 *     x_1 + 2 x_2 + ... + (n-1) x_{n-1} == 0 (mod n)
 * as a monoid under componentwise addition: minimal generators, the
 * unit-group action and its orbits, the fast partition generator for
 * high-degree level-1 generators, congruence reduction, and a verification
 * harness.
 *
 * C interface of the shared library. All objects are opaque handles created
 * and released by the library; every fallible call returns a cgm_status and
 * a thread-local message is kept for the most recent failure
 * (cgm_last_error). Pointers returned through accessors stay valid until
 * the owning handle is freed.
 */
#ifndef CONGMONOID_H
#define CONGMONOID_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cgm_status {
  CGM_OK = 0,
  CGM_ERROR_INVALID_ARGUMENT = 1,
  CGM_ERROR_WRONG_LENGTH = 2,
  CGM_ERROR_NEGATIVE_ENTRY = 3,
  CGM_ERROR_NOT_IN_MONOID = 4,
  CGM_ERROR_MODULUS_MISMATCH = 5,
  CGM_ERROR_PART_SUM = 6,
  CGM_ERROR_NOT_A_UNIT = 7,
  CGM_ERROR_TRIVIAL_SOLUTION = 8,
  CGM_ERROR_RESOURCE_LIMIT = 9,
  CGM_ERROR_SCALE_EXCEEDED = 10,
  CGM_ERROR_BELOW_THRESHOLD = 11,
  CGM_ERROR_TOO_MANY_PARTS = 12,
  CGM_ERROR_PART_TOO_LARGE = 13,
  CGM_ERROR_WRONG_SUM = 14,
  CGM_ERROR_NOT_ACTION_CLOSED = 15,
  CGM_ERROR_SUPPORT_MISMATCH = 16,
  CGM_ERROR_OUT_OF_RANGE = 17,
  CGM_ERROR_INTERNAL = 18
} cgm_status;

const char* cgm_version(void);
const char* cgm_status_name(cgm_status status);
/* Message for the most recent error on the calling thread ("" if none). */
const char* cgm_last_error(void);

/* Frees buffers and strings handed out with caller ownership. */
void cgm_free(void* p);

typedef struct cgm_options {
  int32_t threads;           /* 0 = one worker per hardware core */
  uint64_t candidate_limit;  /* 0 = unlimited enumeration */
} cgm_options;

void cgm_options_init(cgm_options* opts);

/* ---------------- elementary number theory ---------------- */

/* gcd of |a| and |b|; 0 when both are 0. */
int64_t cgm_gcd(int64_t a, int64_t b);
cgm_status cgm_totient(int64_t n, int64_t* out);
/* Ascending units mod n (n >= 2); *out is malloc'd, free with cgm_free. */
cgm_status cgm_units(int64_t n, int64_t** out, size_t* out_len);
/* p(t) as a decimal string (exact at any size); free with cgm_free. */
cgm_status cgm_partition_count(int64_t t, char** out);

/* ---------------- single solutions ---------------- */

/* counts must have n-1 entries. Validates monoid membership. */
cgm_status cgm_solution_validate(int64_t n, const int64_t* counts, size_t len);
cgm_status cgm_solution_degree(int64_t n, const int64_t* counts, size_t len, int64_t* out);
cgm_status cgm_solution_multiplicity(int64_t n, const int64_t* counts, size_t len, int64_t* out);
cgm_status cgm_solution_level(int64_t n, const int64_t* counts, size_t len, int64_t* out);
cgm_status cgm_solution_is_indecomposable(int64_t n, const int64_t* counts, size_t len,
                                          int32_t* out);
/* g . counts into out_counts (n-1 entries); g is reduced mod n first. */
cgm_status cgm_act(int64_t n, int64_t g, const int64_t* counts, size_t len,
                   int64_t* out_counts);
/* sigma_g as 1-based images: out[i-1] = g*i mod n (n-1 entries). */
cgm_status cgm_unit_sigma(int64_t n, int64_t g, int64_t* out);

/* ---------------- solution sets ---------------- */

typedef struct cgm_solution_set cgm_solution_set;

/* The complete minimal generating set, (degree, lex)-sorted. */
cgm_status cgm_indecomposables(int64_t n, const cgm_options* opts, cgm_solution_set** out);
/* Naive reference computation (n <= 15), for cross-checking. */
cgm_status cgm_indecomposables_oracle(int64_t n, cgm_solution_set** out);
/* M(k): every solution of degree k, lex order. */
cgm_status cgm_enumerate_degree(int64_t n, int64_t k, const cgm_options* opts,
                                cgm_solution_set** out);
/* Partition-generated multiplicity-1 solutions of degree k. Below the
 * threshold the call fails with CGM_ERROR_BELOW_THRESHOLD unless force is
 * nonzero, in which case the (possibly incomplete) multiplicity-1 subset is
 * produced. */
cgm_status cgm_generator_layer(int64_t n, int64_t k, int32_t force, const cgm_options* opts,
                               cgm_solution_set** out);
int64_t cgm_generator_threshold(int64_t n);

void cgm_solution_set_free(cgm_solution_set* set);
int64_t cgm_solution_set_modulus(const cgm_solution_set* set);
size_t cgm_solution_set_size(const cgm_solution_set* set);
cgm_status cgm_solution_set_counts(const cgm_solution_set* set, size_t i,
                                   const int64_t** counts, size_t* len);
/* Any output pointer may be NULL. */
cgm_status cgm_solution_set_stats(const cgm_solution_set* set, size_t i, int64_t* degree,
                                  int64_t* multiplicity, int64_t* level, int64_t* orbit_size);

/* ---------------- orbits ---------------- */

typedef struct cgm_orbit_set cgm_orbit_set;

/* Orbit decomposition of the indecomposable set (degree < 0) or of one
 * degree slice IM(degree), sorted by representative. */
cgm_status cgm_im_orbits(int64_t n, int64_t degree, const cgm_options* opts,
                         cgm_orbit_set** out);
/* Orbits of the generator layer, in partition order. */
cgm_status cgm_generator_orbits(int64_t n, int64_t k, int32_t force, const cgm_options* opts,
                                cgm_orbit_set** out);

void cgm_orbit_set_free(cgm_orbit_set* set);
int64_t cgm_orbit_set_modulus(const cgm_orbit_set* set);
size_t cgm_orbit_set_size(const cgm_orbit_set* set);
cgm_status cgm_orbit_info(const cgm_orbit_set* set, size_t i, size_t* size, int64_t* level);
/* Element j of orbit i; element 0 is the canonical representative. */
cgm_status cgm_orbit_element(const cgm_orbit_set* set, size_t i, size_t j,
                             const int64_t** counts, size_t* len);

/* ---------------- congruence reduction ---------------- */

typedef struct cgm_reduction cgm_reduction;

/* Reduces w_1 x_1 + ... + w_r x_r == 0 (mod n) to the canonical equation
 * and solves it: weights reduced mod n, zero weights dropped, duplicates
 * grouped; the handle carries the map, the restricted generators and the
 * lifted generators of the original equation. */
cgm_status cgm_reduce(int64_t n, const int64_t* weights, size_t r, const cgm_options* opts,
                      cgm_reduction** out);
void cgm_reduction_free(cgm_reduction* red);
size_t cgm_reduction_group_count(const cgm_reduction* red);
cgm_status cgm_reduction_group(const cgm_reduction* red, size_t i, int64_t* weight,
                               const size_t** members, size_t* member_count);
cgm_status cgm_reduction_dropped(const cgm_reduction* red, const size_t** indices,
                                 size_t* count);
/* Generators of the original equation: unit vectors of dropped variables
 * first, then the lifts of the restricted generators. */
size_t cgm_reduction_generator_count(const cgm_reduction* red);
cgm_status cgm_reduction_generator(const cgm_reduction* red, size_t i, const int64_t** vec,
                                   size_t* len);
/* Restricted indecomposables on the reduced support (canonical equation). */
cgm_status cgm_reduction_restricted(const cgm_reduction* red, cgm_solution_set** out);

/* ---------------- verification harness ---------------- */

typedef enum cgm_check_status {
  CGM_CHECK_PROVED_AND_VERIFIED = 0,
  CGM_CHECK_CONJECTURE_HOLDS_IN_RANGE = 1,
  CGM_CHECK_FAILED = 2
} cgm_check_status;

typedef struct cgm_report_set cgm_report_set;

/* Runs `check` (one of: conjecture1 conjecture2 conjecture3 lemma-ones
 * level2-remark noether quadratic; NULL or "all" = whole catalog) for every
 * n in [n_min, n_max]. */
cgm_status cgm_verify(int64_t n_min, int64_t n_max, const char* check,
                      const cgm_options* opts, cgm_report_set** out);
void cgm_report_set_free(cgm_report_set* set);
size_t cgm_report_set_size(const cgm_report_set* set);
cgm_status cgm_report_info(const cgm_report_set* set, size_t i, const char** check_name,
                           int64_t* modulus, const char** scope, cgm_check_status* status,
                           int32_t* proved_tier);
size_t cgm_report_witness_count(const cgm_report_set* set, size_t i);
cgm_status cgm_report_witness(const cgm_report_set* set, size_t i, size_t j,
                              const char** description);
size_t cgm_report_count_entries(const cgm_report_set* set, size_t i);
cgm_status cgm_report_count_entry(const cgm_report_set* set, size_t i, size_t j,
                                  const char** name, int64_t* value);
/* 1 when any proved-tier report FAILED (open conjectures never count). */
int32_t cgm_report_set_any_proved_failure(const cgm_report_set* set);
/* Canonical JSON array of the reports; free with cgm_free. */
cgm_status cgm_report_set_to_json(const cgm_report_set* set, char** out);

/* ---------------- summary table ---------------- */

typedef struct cgm_table cgm_table;

/* Rows n = 2..n_max with F(n), p(n), phi(n) and the p(n)+phi(n)-1 bound. */
cgm_status cgm_summary_table(int64_t n_max, const cgm_options* opts, cgm_table** out);
void cgm_table_free(cgm_table* table);
size_t cgm_table_rows(const cgm_table* table);
cgm_status cgm_table_row(const cgm_table* table, size_t i, int64_t* n,
                         int64_t* indecomposable_count, int64_t* partition_count,
                         int64_t* totient, int64_t* kac_bound, int32_t* bound_met);

/* Development aid: sweep vs naive oracle for one n; *out_equal = 1 on match. */
cgm_status cgm_oracle_check(int64_t n, int32_t* out_equal);

#ifdef __cplusplus
}
#endif

#endif /* CONGMONOID_H */
