/*
 * nhspec C API.
 *
 * Time-dependent disc-area quanta of twisted acceleration-enlarged
 * Newton-Hooke space-times, truncated Fock checks of the ladder algebra and
 * validation of closed-form matching times against a bracketing root finder.
 *
 * Every function returns an nhs_status. On failure a message is available
 * from nhs_last_error() on the calling thread until the next failing call.
 * Objects returned through `nhs_xxx **out` are owned by the caller and must be
 * released with the matching nhs_xxx_destroy. Strings returned by accessors
 * stay valid for the lifetime of the owning handle.
 */
#ifndef NHSPEC_H
#define NHSPEC_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(NHSPEC_BUILDING)
#    define NHS_API __declspec(dllexport)
#  else
#    define NHS_API __declspec(dllimport)
#  endif
#else
#  define NHS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    NHS_OK = 0,
    NHS_ERR_INVALID_ARGUMENT = 1,
    NHS_ERR_RANGE = 2,
    NHS_ERR_DEGENERATE_TIME = 3,
    NHS_ERR_EMPTY_WINDOW = 4,
    NHS_ERR_UNSUPPORTED_FAMILY = 5,
    NHS_ERR_WRONG_VARIANT = 6,
    NHS_ERR_BUFFER_TOO_SMALL = 7,
    NHS_ERR_INTERNAL = 99
} nhs_status;

typedef enum { NHS_K1 = 1, NHS_K2, NHS_K3, NHS_K4, NHS_K5, NHS_K6 } nhs_family;
typedef enum { NHS_PLUS = 0, NHS_MINUS = 1 } nhs_variant;
typedef enum { NHS_EVEN = 0, NHS_ODD = 1 } nhs_parity;
typedef enum {
    NHS_ACCEPTED = 0,
    NHS_REJECTED = 1,
    NHS_OUT_OF_DOMAIN = 2,
    NHS_OUT_OF_WINDOW = 3
} nhs_verdict;
typedef enum {
    NHS_SUITE_FOCK = 0,
    NHS_SUITE_PARITY,
    NHS_SUITE_DUALITY,
    NHS_SUITE_LIMITS,
    NHS_SUITE_MATCHING
} nhs_suite;

typedef struct nhs_model nhs_model;
typedef struct nhs_spectrum nhs_spectrum;
typedef struct nhs_fock_rep nhs_fock_rep;
typedef struct nhs_match_report nhs_match_report;
typedef struct nhs_summary nhs_summary;
typedef struct nhs_limit_report nhs_limit_report;

typedef struct {
    double max_interior_deviation;
    double corner_value;
    int dim;
} nhs_defect_report;

typedef struct {
    double max_offdiag_ratio;
    double max_interior_rel_dev;
    double corner;
    double expected_corner;
} nhs_area_check;

typedef struct {
    nhs_family formula;
    const char *branch;
    int printed;
    double argument_re;
    double argument_im;
    int has_time;
    double time;
    nhs_verdict verdict;
    int has_residual;
    double residual;
    int has_nearest_root;
    size_t nearest_root;
    double root_distance;
    int oracle_agrees;
} nhs_candidate;

typedef struct {
    double time;
    double bracket_lo;
    double bracket_hi;
    double residual;
    int multiple;
} nhs_root;

typedef struct {
    size_t base_index;
    int k;
    double time;
    double residual;
    int verified;
} nhs_periodic_root;

typedef struct {
    const char *name;
    int passed;
    double deviation;
    double tolerance;
} nhs_case_record;

typedef struct {
    double tau;
    double value;
    double limit;
    double deviation;
} nhs_limit_sample;

NHS_API const char *nhs_last_error(void);
NHS_API const char *nhs_version(void);

/* ---- deformation kernel ------------------------------------------------- */

NHS_API nhs_status nhs_model_create(nhs_family family, nhs_variant variant, double kappa,
                                    double tau, nhs_model **out);
NHS_API void nhs_model_destroy(nhs_model *model);

NHS_API nhs_status nhs_eval_f(const nhs_model *model, double t, double *out);
NHS_API nhs_status nhs_eval_quantum(const nhs_model *model, double t, double *out);
NHS_API nhs_status nhs_apply_duality(const nhs_model *model, double t, double *out);
NHS_API nhs_status nhs_parity_class(nhs_family family, nhs_parity *out);
/* *has_dual is set to 0 for families without a dual. */
NHS_API nhs_status nhs_dual_of(nhs_family family, int *has_dual, nhs_family *out);
NHS_API nhs_status nhs_galilei_limit(const nhs_model *model, int *degree, double *coefficient);
/* Writes order+1 coefficients. */
NHS_API nhs_status nhs_series_expand(const nhs_model *model, int order, double *coeffs,
                                     size_t capacity);

/* ---- spectrum ----------------------------------------------------------- */

NHS_API nhs_status nhs_level(const nhs_model *model, double t, int n, double *out);
NHS_API nhs_status nhs_spectrum_create(const nhs_model *model, double t, int n_max,
                                       nhs_spectrum **out);
NHS_API nhs_status nhs_canonical_spectrum_create(double theta, int n_max, nhs_spectrum **out);
NHS_API void nhs_spectrum_destroy(nhs_spectrum *spectrum);
/* *has_time is 0 for the canonical (time-independent) table. */
NHS_API nhs_status nhs_spectrum_time(const nhs_spectrum *spectrum, int *has_time, double *time);
NHS_API nhs_status nhs_spectrum_quantum(const nhs_spectrum *spectrum, double *out);
NHS_API size_t nhs_spectrum_size(const nhs_spectrum *spectrum);
NHS_API nhs_status nhs_spectrum_level(const nhs_spectrum *spectrum, size_t index, int *n,
                                      double *s);

/* ---- truncated Fock representation -------------------------------------- */

NHS_API nhs_status nhs_fock_rep_create(const nhs_model *model, double t, int dim,
                                       nhs_fock_rep **out);
NHS_API void nhs_fock_rep_destroy(nhs_fock_rep *rep);
NHS_API int nhs_fock_rep_dim(const nhs_fock_rep *rep);
NHS_API double nhs_fock_rep_f_value(const nhs_fock_rep *rep);
NHS_API int nhs_fock_rep_orientation(const nhs_fock_rep *rep);
/* Real matrices, row-major, dim*dim entries. which: "a", "a_dagger", "x1",
 * "N", "S", "N_coordinates". */
NHS_API nhs_status nhs_fock_rep_matrix(const nhs_fock_rep *rep, const char *which, double *out,
                                       size_t capacity);
/* x2 as interleaved (re, im) pairs, row-major, 2*dim*dim entries. */
NHS_API nhs_status nhs_fock_rep_x2(const nhs_fock_rep *rep, double *out, size_t capacity);
/* Ascending eigenvalues of S (dim entries) plus the diagonal-structure check. */
NHS_API nhs_status nhs_fock_rep_area(const nhs_fock_rep *rep, double *eigenvalues,
                                     size_t capacity, nhs_area_check *check);

NHS_API nhs_status nhs_commutator_defect(int dim, nhs_defect_report *out);
NHS_API nhs_status nhs_number_commutators_defect(int dim, nhs_defect_report *raise,
                                                 nhs_defect_report *lower);
NHS_API nhs_status nhs_eigenstate(int n, int dim, double *out, size_t capacity);

/* ---- matching times ----------------------------------------------------- */

/* grid_points <= 0 selects the default; tol <= 0 selects the default. */
NHS_API nhs_status nhs_match_validate(const nhs_model *model, double theta, double t_lo,
                                      double t_hi, double tol, int grid_points,
                                      nhs_match_report **out);
NHS_API void nhs_match_report_destroy(nhs_match_report *report);
NHS_API size_t nhs_match_candidate_count(const nhs_match_report *report);
NHS_API nhs_status nhs_match_candidate(const nhs_match_report *report, size_t index,
                                       nhs_candidate *out);
NHS_API size_t nhs_match_root_count(const nhs_match_report *report);
NHS_API nhs_status nhs_match_root(const nhs_match_report *report, size_t index, nhs_root *out);
NHS_API int nhs_match_formula_defect(const nhs_match_report *report);
NHS_API int nhs_match_grid_points(const nhs_match_report *report);
NHS_API size_t nhs_match_note_count(const nhs_match_report *report);
NHS_API const char *nhs_match_note(const nhs_match_report *report, size_t index);
/* Minus variant only. Writes up to capacity entries; *count receives the total. */
NHS_API nhs_status nhs_match_periodic(const nhs_match_report *report, int k_lo, int k_hi,
                                      nhs_periodic_root *out, size_t capacity, size_t *count);

/* ---- verification suites ------------------------------------------------ */

NHS_API nhs_status nhs_verify(nhs_suite suite, int dim, nhs_summary **out);
NHS_API void nhs_summary_destroy(nhs_summary *summary);
NHS_API const char *nhs_summary_suite(const nhs_summary *summary);
NHS_API int nhs_summary_run(const nhs_summary *summary);
NHS_API int nhs_summary_passed(const nhs_summary *summary);
NHS_API double nhs_summary_worst(const nhs_summary *summary);
NHS_API const char *nhs_summary_worst_case(const nhs_summary *summary);
NHS_API size_t nhs_summary_record_count(const nhs_summary *summary);
NHS_API nhs_status nhs_summary_record(const nhs_summary *summary, size_t index,
                                      nhs_case_record *out);

/* ---- Galilei limit ------------------------------------------------------ */

/* taus may be NULL with count 0 to use the default ladder {10,20,40,80}*|t|. */
NHS_API nhs_status nhs_limit_report_create(nhs_family family, nhs_variant variant, double kappa,
                                           double t, const double *taus, size_t count,
                                           nhs_limit_report **out);
NHS_API void nhs_limit_report_destroy(nhs_limit_report *report);
NHS_API size_t nhs_limit_sample_count(const nhs_limit_report *report);
NHS_API nhs_status nhs_limit_get_sample(const nhs_limit_report *report, size_t index,
                                        nhs_limit_sample *out);
/* *has_order is 0 when every deviation vanishes. */
NHS_API nhs_status nhs_limit_order(const nhs_limit_report *report, int *has_order, double *order);
NHS_API nhs_status nhs_limit_polynomial(const nhs_limit_report *report, int *degree,
                                        double *coefficient);
NHS_API int nhs_limit_exact(const nhs_limit_report *report);
NHS_API int nhs_limit_polynomial_confirmed(const nhs_limit_report *report);

#ifdef __cplusplus
}
#endif

#endif /* NHSPEC_H */
