/*
 * kwise.h - C interface to the kwise shared library.
 *
 * Exact measures on the sign hypercube {-1,+1}^n, k-wise independence
 * checks, and Khintchine moment constants computed by exact rational
 * linear programming.
 *
 * Conventions: every function that can fail returns an int status code
 * (KW_OK on success) and reports results through out parameters. Objects
 * are opaque handles released with the matching *_free function. Strings
 * returned through char** are heap copies released with kw_string_free.
 * kw_last_error() describes the most recent failure on the calling thread.
 */
#ifndef KWISE_H
#define KWISE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  KW_OK = 0,
  KW_ERR_INVALID = 1,    /* bad argument or precondition violated */
  KW_ERR_PARSE = 2,      /* malformed rational, pattern or measure document */
  KW_ERR_GUARD = 3,      /* enumeration size guard exceeded */
  KW_ERR_INFEASIBLE = 4, /* LP infeasible or unbounded: builder bug signal */
  KW_ERR_INTERNAL = 5
};

typedef struct kw_measure kw_measure; /* orbit or atomic probability measure */
typedef struct kw_indep kw_indep;     /* k-wise independence report */
typedef struct kw_cell kw_cell;       /* solved Khintchine constant cell */
typedef struct kw_cert kw_cert;       /* verified dual certificate */
typedef struct kw_quartic kw_quartic; /* quartic moment decomposition */

const char* kw_version(void);
const char* kw_last_error(void);

void kw_string_free(char* s);
void kw_measure_free(kw_measure* m);
void kw_indep_free(kw_indep* r);
void kw_cell_free(kw_cell* c);
void kw_cert_free(kw_cert* c);
void kw_quartic_free(kw_quartic* q);

/* ---- measures -------------------------------------------------------- */

/* kind: "extremal-pairwise" | "antipodal" | "balanced" | "independent" */
int kw_measure_construct(const char* kind, unsigned n, kw_measure** out);

/* JSON measure document, see the serializer for the schema */
int kw_measure_parse(const char* text, kw_measure** out);
int kw_measure_serialize(const kw_measure* m, char** out_json);

unsigned kw_measure_n(const kw_measure* m);
int kw_measure_is_orbit(const kw_measure* m);
/* number of points carrying mass, as a decimal string (can exceed 2^64) */
int kw_measure_support_points(const kw_measure* m, char** out);
/* largest k <= k_max for which the measure is k-wise independent (0 if none) */
int kw_measure_independence_level(const kw_measure* m, unsigned k_max, unsigned* out_level);
int kw_measure_equal(const kw_measure* a, const kw_measure* b, int* out_equal);

/* exact E|sum a_i eps_i|^p; a_csv is "ones" or comma-separated rationals */
int kw_measure_moment(const kw_measure* m, const char* a_csv, unsigned p, char** out_rational);

/* ---- independence ----------------------------------------------------- */

int kw_check_independence(const kw_measure* m, unsigned k, kw_indep** out);
int kw_indep_ok(const kw_indep* r);
size_t kw_indep_witness_size(const kw_indep* r);               /* 0 when ok */
unsigned kw_indep_witness_index(const kw_indep* r, size_t i);  /* 1-based */
int kw_indep_witness_value(const kw_indep* r, char** out);

/* ---- Khintchine cells ------------------------------------------------- */

/*
 * mode: "orbit" (exchangeable, needs all-equal a) or "full" (2^n points).
 * p: decimal string; integer values are solved exactly, non-integer values
 * run in approximate (128-bit objective) mode and flag the cell.
 */
int kw_solve_cell(unsigned n, const char* p, unsigned k, const char* mode,
                  const char* a_csv, kw_cell** out);

int kw_cell_moment(const kw_cell* c, char** out);       /* exact rational */
int kw_cell_constant(const kw_cell* c, char** out);     /* 12 significant digits */
int kw_cell_lower_ref(const kw_cell* c, char** out);    /* n^(1/2-1/p) */
int kw_cell_holder_ref(const kw_cell* c, char** out);   /* sqrt(n) */
int kw_cell_optimizer(const kw_cell* c, kw_measure** out);
int kw_cell_is_vertex(const kw_cell* c);
int kw_cell_multiple_optima(const kw_cell* c);
int kw_cell_optimizer_is_extremal(const kw_cell* c);
int kw_cell_is_approximate(const kw_cell* c);

/* ---- dual certificate -------------------------------------------------- */

int kw_certify(unsigned n, unsigned p, kw_cert** out);
int kw_cert_u_same(const kw_cert* c, char** out);   /* u(1,1) = u(-1,-1) */
int kw_cert_u_mixed(const kw_cert* c, char** out);  /* u(1,-1) = u(-1,1) */
int kw_cert_feasible(const kw_cert* c);
int kw_cert_value(const kw_cert* c, char** out);
int kw_cert_primal(const kw_cert* c, char** out);
int kw_cert_matches_primal(const kw_cert* c);
size_t kw_cert_equality_count(const kw_cert* c);
unsigned kw_cert_equality_weight(const kw_cert* c, size_t i);
int kw_cert_slack(const kw_cert* c, unsigned w, char** out);

/* ---- quartic decomposition --------------------------------------------- */

/* requires a pairwise independent orbit measure with n >= 4 */
int kw_quartic_decompose(const kw_measure* m, const char* a_csv, kw_quartic** out);
int kw_quartic_independent_part(const kw_quartic* q, char** out);
int kw_quartic_correlation(const kw_quartic* q, char** out);
int kw_quartic_cross_sum(const kw_quartic* q, char** out);
int kw_quartic_total(const kw_quartic* q, char** out);
/* 1 iff total equals the directly computed fourth moment */
int kw_quartic_identity_ok(const kw_quartic* q);

#ifdef __cplusplus
}
#endif

#endif /* KWISE_H */
