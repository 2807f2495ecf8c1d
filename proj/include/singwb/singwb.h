#ifndef SINGWB_SINGWB_H
#define SINGWB_SINGWB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Values 1..16 mirror the library's error kinds. */
typedef enum swb_status {
  SWB_OK = 0,
  SWB_ERR_DIVISION_BY_ZERO = 1,
  SWB_ERR_INCOMPATIBLE_RADICALS = 2,
  SWB_ERR_BUDGET_EXCEEDED = 3,
  SWB_ERR_VARIABLE_MISMATCH = 4,
  SWB_ERR_UNSUPPORTED_TYPE = 5,
  SWB_ERR_INVALID_AUTOMORPHISM = 6,
  SWB_ERR_DIMENSION_MISMATCH = 7,
  SWB_ERR_SHAPE_MISMATCH = 8,
  SWB_ERR_SINGULAR_SYSTEM = 9,
  SWB_ERR_CLOSURE_BUDGET_EXCEEDED = 10,
  SWB_ERR_UNSUPPORTED_LABEL = 11,
  SWB_ERR_NORMAL_FORM_MISMATCH = 12,
  SWB_ERR_PULLBACK_MISMATCH = 13,
  SWB_ERR_UNCLASSIFIED_SINGULARITY = 14,
  SWB_ERR_PARSE = 15,
  SWB_ERR_USAGE = 16,
  SWB_ERR_NULL_ARGUMENT = 100,
  SWB_ERR_INTERNAL = 101
} swb_status;

typedef struct swb_report swb_report;
typedef struct swb_family swb_family;
typedef struct swb_quotient swb_quotient;

const char* swb_version(void);
const char* swb_status_name(swb_status s);
/* Message of the last failing call on this thread ("" when none). */
const char* swb_last_error(void);

/* Strings returned through char** are owned by the caller. */
void swb_string_free(char* s);

/* Reports */
void swb_report_free(swb_report* r);
int swb_report_ok(const swb_report* r);
size_t swb_report_size(const swb_report* r);
size_t swb_report_failures(const swb_report* r);
/* status: 0 pass, 1 fail, 2 skipped. *name stays valid while r lives. */
swb_status swb_report_check(const swb_report* r, size_t i, const char** name, int* status);
/* RunReport JSON; checks sorted by name. */
swb_status swb_report_json(const swb_report* r, const char* command, uint64_t seed, int with_timing,
                           char** out);

/* Root data */
swb_status swb_fold(const char* type, const char* omega, swb_report** out);
swb_status swb_fold_table(swb_report** out);
/* Vanishing roots of A5 and the Omega average of the folded point. */
swb_status swb_example_roots(swb_report** out);

/* Klein data; omega may be NULL or "" for the default. */
swb_status swb_klein_verify(const char* type, const char* omega, swb_report** out);

/* Quiver */
swb_status swb_quiver_verify_action(const char* type, const char* generator, int s3, uint64_t seed,
                                    int trials, swb_report** out);
swb_status swb_symplectic(swb_report** out);
/* mu: NULL for random values per sample, else n_mu complex values (re, im pairs). */
swb_status swb_quiver_sample(const char* type, const double* mu, size_t n_mu, int samples,
                             uint64_t seed, swb_report** out);

/* Flat coordinates: JSON with each psi as a polynomial and the degree table. */
swb_status swb_flat_coords(const char* type, char** json_out);
swb_status swb_flat_verify(const char* type, swb_report** out);

/* Families: labels A3, A5, ..., B2, ..., C3, D4, E6, F4, G2 and "example". */
swb_status swb_family_open(const char* label, swb_family** out);
void swb_family_free(swb_family* f);
swb_status swb_family_json(const swb_family* f, char** json_out);
/* Equivariance and special-fibre normal form. */
swb_status swb_family_verify(const swb_family* f, swb_report** out);
/* Identity checks: "a_identity.2", "a_identity.3", "d4_coefficients", "e6_coefficients". */
swb_status swb_identity_verify(const char* name, swb_report** out);
/* params: "k=v,..." with rational values; any decimal value switches to the
   numeric analyzer. budget bounds the Groebner computations (0: default). */
swb_status swb_fibre_analyze(const swb_family* f, const char* params, size_t budget, uint64_t seed,
                             char** json_out);
/* Fibres (0,1), (4/27,1) and the special fibre of the example family. */
swb_status swb_example_fibres(uint64_t seed, swb_report** out);

/* Quotients: B2..B8, C3, G2, F4 */
swb_status swb_quotient_open(const char* label, swb_quotient** out);
void swb_quotient_free(swb_quotient* q);
swb_status swb_quotient_json(const swb_quotient* q, char** json_out);
swb_status swb_quotient_verify(const swb_quotient* q, uint64_t seed, swb_report** out);
/* B2 only: the two conditions, their loci and witnesses. */
swb_status swb_discriminant_b2(swb_report** out, char** json_out);

/* "smoke" or "full". e6_table_json may be NULL; otherwise it replaces the stored
   E6 coefficient table ({"A0": "...", ...}, s6 = sqrt 6). */
swb_status swb_suite(const char* name, uint64_t seed, int samples, const char* e6_table_json,
                     swb_report** out);

#ifdef __cplusplus
}
#endif

#endif
