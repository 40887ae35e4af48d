#ifndef HECKE_HECKE_H
#define HECKE_HECKE_H

/*
 * C interface to the cyclotomic Hecke algebra library.
 *
 * Every fallible call returns an hk_status. On failure the message is kept
 * per thread and read with hk_last_error(). Strings handed out through
 * `char** out` parameters belong to the caller and are released with
 * hk_string_free(). Handles are released with their _destroy function;
 * passing NULL to any _destroy or free function is a no-op.
 *
 * Scalars cross the boundary as text in the scalar syntax ("q - q^-1",
 * "v1/(v1 - v2)"); shapes as nested JSON lists ("[[2,1],[],[1]]").
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(HECKE_BUILDING_LIBRARY)
#define HECKE_API __declspec(dllexport)
#else
#define HECKE_API __declspec(dllimport)
#endif
#else
#define HECKE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hk_status {
  HK_OK = 0,
  HK_INVALID_ARGUMENT = 1,
  HK_OUT_OF_RANGE = 2,
  HK_PARSE = 3,
  HK_DIVISION_BY_ZERO = 4,
  HK_VANISHING_DENOMINATOR = 5,
  HK_NOT_SEMISIMPLE = 6,
  HK_NOT_DIAGONALIZABLE = 7,
  HK_REDUCIBLE = 8,
  HK_EQUAL_SPECTRAL_PARAMETERS = 9,
  HK_INVALID_CONTENT_STRING = 10,
  HK_PARAMS_MISMATCH = 11,
  HK_CAPACITY = 12,
  HK_OVERFLOW = 13,
  HK_INTERNAL = 14
} hk_status;

typedef enum hk_format { HK_FORMAT_TEXT = 0, HK_FORMAT_JSON = 1 } hk_format;

typedef struct hk_algebra hk_algebra;
typedef struct hk_element hk_element;
typedef struct hk_rep hk_rep;

/* A numeric specialization: q and v[0..m-1] as rationals, e.g. "2", "-1/3". */
typedef struct hk_param_spec {
  int m;
  const char* q;
  const char* v[7];
} hk_param_spec;

typedef struct hk_check_options {
  const hk_param_spec* spec; /* NULL selects the default specialization */
  uint64_t seed;
  size_t morphism_pairs;
} hk_check_options;

HECKE_API const char* hk_version(void);
HECKE_API const char* hk_status_name(hk_status status);
/* Message of the last failed call on this thread; "" when there is none. */
HECKE_API const char* hk_last_error(void);
HECKE_API void hk_string_free(char* s);

/* Default check options: default specialization, fixed seed, 200 pairs. */
HECKE_API hk_check_options hk_check_options_default(void);

/* H(m,1,n) with 1 <= m <= 7 and 0 <= n <= 9. */
HECKE_API hk_status hk_algebra_create(int m, int n, hk_algebra** out);
HECKE_API void hk_algebra_destroy(hk_algebra* h);
HECKE_API hk_status hk_algebra_basis_size(const hk_algebra* h, uint64_t* out);
HECKE_API hk_status hk_algebra_basis(const hk_algebra* h, hk_format format, char** out);

/* Parses and reduces `text`; t^-1 is rejected unless allow_tau_inverse. */
HECKE_API hk_status hk_element_parse(const hk_algebra* h, const char* text, int allow_tau_inverse,
                                     hk_element** out);
HECKE_API hk_status hk_element_multiply(const hk_algebra* h, const hk_element* a, const hk_element* b,
                                        hk_element** out);
HECKE_API hk_status hk_element_add(const hk_element* a, const hk_element* b, hk_element** out);
HECKE_API hk_status hk_element_equal(const hk_element* a, const hk_element* b, int* out);
HECKE_API hk_status hk_element_term_count(const hk_element* e, size_t* out);
HECKE_API hk_status hk_element_render(const hk_element* e, hk_format format, char** out);
/* The Jucys-Murphy element J_i, 1 <= i <= n. */
HECKE_API hk_status hk_jm_element(const hk_algebra* h, int i, hk_element** out);
/* sigma_i + (q - q^-1) beta / (alpha - beta), with alpha, beta scalars. */
HECKE_API hk_status hk_baxterize(const hk_algebra* h, int i, const char* alpha, const char* beta,
                                 hk_element** out);
HECKE_API void hk_element_destroy(hk_element* e);

/* Seminormal representation of an m-partition. */
HECKE_API hk_status hk_rep_create(const char* shape, hk_rep** out);
HECKE_API void hk_rep_destroy(hk_rep* r);
HECKE_API hk_status hk_rep_dimension(const hk_rep* r, size_t* out);
/* Matrices of t and s_i; specialized at `spec` unless it is NULL. */
HECKE_API hk_status hk_rep_render(const hk_rep* r, const hk_param_spec* spec, hk_format format, char** out);
/* The matrix of J_i as JSON nested arrays. */
HECKE_API hk_status hk_rep_jm(const hk_rep* r, int i, char** out);
/* Defining relations and restriction; *ok is 1 when both hold. */
HECKE_API hk_status hk_rep_verify(const hk_rep* r, int* ok);

/* Tableaux of every m-partition of n, or of `shape` when it is not NULL. */
HECKE_API hk_status hk_tableaux_report(int m, int n, const char* shape, hk_format format, char** out);

/* Two-strand affine representation: dimension 2 when b is not NULL,
 * otherwise dimension 1 with the given sign. */
HECKE_API hk_status hk_h2_report(const char* a, const char* b, int sign, hk_format format, char** out);

HECKE_API hk_status hk_baxter_report(const hk_algebra* h, hk_format format, char** out, int* ok);

HECKE_API hk_status hk_is_semisimple(const hk_param_spec* spec, int n, int* out);

/* Runs every verification suite for (m, n). */
HECKE_API hk_status hk_check(int m, int n, const hk_check_options* options, hk_format format, char** out,
                             int* ok);

#ifdef __cplusplus
}
#endif

#endif
