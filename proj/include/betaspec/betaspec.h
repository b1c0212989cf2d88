#ifndef BETASPEC_H
#define BETASPEC_H

/*
 * C interface to libbetaspec.
 *
 * Every fallible call returns a bs_status; on failure a message for the
 * calling thread is available from bs_last_error() until the next call.
 * Strings returned through char** are owned by the caller and released with
 * bs_free_string(). Handles are released with their *_free function; passing
 * NULL to any *_free is a no-op.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(BETASPEC_BUILDING)
#define BS_API __attribute__((visibility("default")))
#else
#define BS_API
#endif

typedef enum bs_status {
  BS_OK = 0,
  BS_ERR_CONFIG = 1,
  BS_ERR_PARSE = 2,
  BS_ERR_INVALID_ORDER = 3,
  BS_ERR_INVALID_PARAMETER = 4,
  BS_ERR_SIZE_LIMIT = 5,
  BS_ERR_ZERO_ROOT = 6,
  BS_ERR_POLE = 7,
  BS_ERR_CONVERGENCE = 8,
  BS_ERR_REFINEMENT = 9,
  BS_ERR_INCONSISTENCY = 10,
  BS_ERR_SINGULARITY = 11,
  BS_ERR_UNKNOWN_TEST_FUNCTION = 12,
  BS_ERR_UNKNOWN_TARGET = 13,
  BS_ERR_NULL_ARGUMENT = 14,
  BS_ERR_INTERNAL = 15
} bs_status;

typedef enum bs_beta_class {
  BS_BETA_REAL_GT1 = 0,
  BS_BETA_REAL_EQ1 = 1,
  BS_BETA_COMPLEX_NONZERO = 2
} bs_beta_class;

typedef enum bs_format { BS_FORMAT_CSV = 0, BS_FORMAT_JSON = 1 } bs_format;

typedef enum bs_weyl_kind { BS_WEYL_EIGEN = 0, BS_WEYL_SINGULAR = 1 } bs_weyl_kind;

typedef struct bs_options {
  unsigned target_digits;      /* digits two precision rungs must agree on */
  unsigned long precision_bits; /* first rung, >= 64 */
  unsigned threads;            /* 0 = pick from hardware */
} bs_options;

typedef struct bs_beta bs_beta;
typedef struct bs_poly bs_poly;
typedef struct bs_roots bs_roots;
typedef struct bs_bundle bs_bundle;

BS_API const char* bs_status_name(bs_status status);
BS_API const char* bs_last_error(void);
BS_API void bs_free_string(char* s);
BS_API void bs_options_default(bs_options* options);

/* beta */
BS_API bs_status bs_beta_parse(const char* text, bs_beta** out);
BS_API void bs_beta_free(bs_beta* beta);
BS_API bs_status bs_beta_class_of(const bs_beta* beta, bs_beta_class* out);
BS_API bs_status bs_beta_to_string(const bs_beta* beta, char** out);

/* characteristic polynomial */
BS_API bs_status bs_charpoly(const bs_beta* beta, size_t n, bs_poly** out);
BS_API bs_status bs_poly_reverse(const bs_poly* poly, bs_poly** out);
BS_API void bs_poly_free(bs_poly* poly);
BS_API bs_status bs_poly_degree(const bs_poly* poly, size_t* out);
/* Exact coefficient k as "p/q" or "a+bi". */
BS_API bs_status bs_poly_coeff(const bs_poly* poly, size_t k, char** out);

/* roots */
BS_API bs_status bs_solve(const bs_poly* poly, const bs_options* options, bs_roots** out);
BS_API void bs_roots_free(bs_roots* roots);
BS_API bs_status bs_roots_count(const bs_roots* roots, size_t* out);
BS_API bs_status bs_roots_precision(const bs_roots* roots, unsigned long* out);
BS_API bs_status bs_roots_get(const bs_roots* roots, size_t i, double* re, double* im);
BS_API bs_status bs_roots_format(const bs_roots* roots, size_t i, unsigned digits, char** re, char** im);

/* Reports. `ns` is a list of matrix orders of length `count`. */
BS_API bs_status bs_report_matrix(const bs_beta* beta, size_t n, unsigned digits, int exact, char** out);
BS_API bs_status bs_report_charpoly(const bs_beta* beta, size_t n, unsigned digits, int exact, char** out);
BS_API bs_status bs_report_eigs(const bs_beta* beta, size_t n, const bs_options* options, unsigned digits,
                                bs_format format, char** out);
BS_API bs_status bs_report_cluster(const bs_beta* beta, const size_t* ns, size_t count, double epsilon,
                                   const bs_options* options, unsigned digits, bs_format format, char** out);
BS_API bs_status bs_report_outliers(const bs_beta* beta, const size_t* ns, size_t count, double epsilon,
                                    unsigned digits, bs_format format, char** out);
BS_API bs_status bs_report_singvals(const bs_beta* beta, size_t n, unsigned long precision_bits, unsigned digits,
                                    bs_format format, char** out);
/* test_function NULL selects every built-in function. */
BS_API bs_status bs_report_weyl(const bs_beta* beta, const size_t* ns, size_t count, const char* test_function,
                                bs_weyl_kind kind, const bs_options* options, unsigned digits, bs_format format,
                                char** out);
BS_API bs_status bs_report_beta1(const size_t* ns, size_t count, unsigned digits, int fit_c2, bs_format format,
                                 char** out);
BS_API bs_status bs_report_power_trace(size_t n, size_t iterations, char** out);

/* reproduce bundles */
BS_API bs_status bs_reproduce(const char* target, bs_bundle** out);
BS_API void bs_bundle_free(bs_bundle* bundle);
BS_API bs_status bs_bundle_count(const bs_bundle* bundle, size_t* out);
/* Borrowed pointers, valid until bs_bundle_free. */
BS_API bs_status bs_bundle_entry(const bs_bundle* bundle, size_t i, const char** name, const char** content);

#ifdef __cplusplus
}
#endif

#endif
