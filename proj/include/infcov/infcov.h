/* C interface to the infcov library. Every fallible call returns an
 * infcov_status; on failure infcov_last_error() describes the problem for the
 * calling thread. Strings returned through char** belong to the caller and
 * are released with infcov_string_free. */
#ifndef INFCOV_INFCOV_H
#define INFCOV_INFCOV_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define INFCOV_API __declspec(dllexport)
#else
#  define INFCOV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum infcov_status {
  INFCOV_OK = 0,
  INFCOV_E_INVALID_INPUT = 1,
  INFCOV_E_PARSE = 2,
  INFCOV_E_ZERO_POLYNOMIAL = 3,
  INFCOV_E_TOLERANCE_NOT_REACHED = 4,
  INFCOV_E_FIELD_MISMATCH = 5,
  INFCOV_E_BOTH_ZERO = 6,
  INFCOV_E_ORDER_UNAVAILABLE = 7,
  INFCOV_E_DIVISION_BY_ZERO = 8,
  INFCOV_E_ILLEGAL_OP = 9,
  INFCOV_E_INVALID_EPIMORPHISM = 10,
  INFCOV_E_CHARACTER_INVALID = 11,
  INFCOV_E_INVALID_TYPE = 12,
  INFCOV_E_INVALID_PROFILE = 13,
  INFCOV_E_DEGREE_OUT_OF_RANGE = 14,
  INFCOV_E_FIELD_TOO_SMALL = 15,
  INFCOV_E_MULTIPLICITY_TOO_SMALL = 16,
  INFCOV_E_DEGENERATE_INPUT = 17,
  INFCOV_E_NOT_EPIMORPHISM = 18,
  INFCOV_E_NOT_A_THREE_NET = 19,
  INFCOV_E_INVARIANT_BREACH = 20,
  INFCOV_E_NULL_ARGUMENT = 21,
  INFCOV_E_INTERNAL = 22
} infcov_status;

typedef struct infcov_complex infcov_complex;
typedef struct infcov_arrangement infcov_arrangement;

/* Shared options for report builders. `chars` may be NULL (defaults 0,2,3,5). */
typedef struct infcov_options {
  const int64_t* chars;
  size_t num_chars;
  int64_t n_min;
  int64_t n_max;
  uint64_t seed;
  double tolerance;
  unsigned workers; /* 0: hardware concurrency; results never depend on it */
  int has_degree;
  size_t degree;
  int trials;
} infcov_options;

INFCOV_API const char* infcov_version(void);
INFCOV_API const char* infcov_status_name(infcov_status status);
INFCOV_API const char* infcov_last_error(void);
INFCOV_API void infcov_string_free(char* s);
INFCOV_API void infcov_options_default(infcov_options* opts);

/* Equivariant chain complexes. `source` names the input in parse errors. */
INFCOV_API infcov_status infcov_complex_from_json(const char* json, const char* source, infcov_complex** out);
INFCOV_API infcov_status infcov_complex_from_presentation(const char* presentation_json,
                                                          const char* epimorphism_json, infcov_complex** out);
INFCOV_API infcov_status infcov_complex_orbifold(int g, int r, const int64_t* mu, size_t s, infcov_complex** out);
INFCOV_API infcov_status infcov_complex_pencil(size_t d, const int64_t* n, infcov_complex** out);
INFCOV_API void infcov_complex_free(infcov_complex* cx);
INFCOV_API infcov_status infcov_complex_top_degree(const infcov_complex* cx, size_t* out);
INFCOV_API infcov_status infcov_complex_to_json(const infcov_complex* cx, char** out);

/* Alexander polynomial of degree i as {"min_exp", "coeffs"} JSON. */
INFCOV_API infcov_status infcov_alexander_poly(const infcov_complex* cx, size_t degree, char** out);
INFCOV_API infcov_status infcov_alpha(const infcov_complex* cx, size_t degree, int64_t characteristic,
                                      int64_t* out);
INFCOV_API infcov_status infcov_cover_betti(const infcov_complex* cx, size_t degree, int64_t n,
                                            int64_t characteristic, int64_t* out);
/* Order of the torsion of H_degree of the N-fold cover, as a decimal string. */
INFCOV_API infcov_status infcov_cover_torsion_order(const infcov_complex* cx, size_t degree, int64_t n,
                                                    char** out);

/* Line arrangements. */
INFCOV_API infcov_status infcov_arrangement_from_json(const char* json, const char* source,
                                                      infcov_arrangement** out);
INFCOV_API infcov_status infcov_arrangement_deleted_monomial(int64_t mu, infcov_arrangement** out);
INFCOV_API infcov_status infcov_arrangement_ceva(int64_t m, infcov_arrangement** out);
INFCOV_API void infcov_arrangement_free(infcov_arrangement* arr);
INFCOV_API infcov_status infcov_arrangement_size(const infcov_arrangement* arr, size_t* out);
INFCOV_API infcov_status infcov_aomoto_tau1(const infcov_arrangement* arr, const int64_t* nu, size_t len,
                                            char** out);

/* Report builders: JSON documents with inputs, results, cross checks and a
 * provenance block. */
INFCOV_API infcov_status infcov_report_invariants(const infcov_complex* cx, const infcov_options* opts,
                                                  char** out);
INFCOV_API infcov_status infcov_report_cover(const infcov_complex* cx, const infcov_options* opts, char** out);
INFCOV_API infcov_status infcov_report_orbifold(int g, int r, const int64_t* mu, size_t s,
                                                const infcov_options* opts, char** out);
INFCOV_API infcov_status infcov_report_arrangement(const infcov_arrangement* arr, const int64_t* nu, size_t len,
                                                   const infcov_options* opts, char** out);
/* Multinet JSON with "classes", optional "weights" and "base_locus". */
INFCOV_API infcov_status infcov_report_multinet(const infcov_arrangement* arr, const char* multinet_json,
                                                const char* source, const infcov_options* opts, char** out);
/* Built-in Ceva(m) multinet (unit weights, base locus computed). */
INFCOV_API infcov_status infcov_report_ceva_multinet(int64_t m, const infcov_options* opts, char** out);
INFCOV_API infcov_status infcov_report_mahler(const char* poly_json, const char* source,
                                              const infcov_options* opts, char** out);
INFCOV_API infcov_status infcov_report_construct_deleted_monomial(int64_t mu, const infcov_options* opts,
                                                                  char** out);
INFCOV_API infcov_status infcov_report_construct_lift(const int64_t* chi, size_t len, int64_t n, int64_t p,
                                                      const infcov_options* opts, char** out);
INFCOV_API infcov_status infcov_report_construct_pencil(size_t d, const int64_t* n, const infcov_options* opts,
                                                        char** out);

#ifdef __cplusplus
}
#endif

#endif
