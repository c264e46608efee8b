/*
 * Copyright 2026 The pathspec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libpathspec: characteristic polynomials of path and cycle
 * graphs, adaptive-precision roots of f_n(x) = c, axis-aligned ellipse fits
 * of the root clouds, and exact verification suites.
 *
 * Conventions:
 *  - Every fallible call returns a pathspec_status. On failure the output
 *    arguments are untouched and pathspec_last_error() describes the problem
 *    (the message is thread-local and valid until the next failing call on
 *    the same thread).
 *  - Opaque handles are created by the library and released with the
 *    matching *_free function; passing NULL to *_free is a no-op.
 *  - Arbitrary-precision integers travel as NUL-terminated decimal strings.
 *  - Text outputs use the snprintf protocol: at most `capacity` bytes
 *    including the terminator are written to `buffer`, and `*needed` (when
 *    non-NULL) receives the full length excluding the terminator. A too-small
 *    buffer yields PATHSPEC_ERR_BUFFER_TOO_SMALL with `*needed` set.
 *  - All functions are safe to call concurrently on distinct handles; const
 *    handles may be shared between threads.
 */

#ifndef PATHSPEC_PATHSPEC_H
#define PATHSPEC_PATHSPEC_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(PATHSPEC_BUILDING_LIBRARY)
#    define PATHSPEC_API __declspec(dllexport)
#  else
#    define PATHSPEC_API __declspec(dllimport)
#  endif
#else
#  define PATHSPEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pathspec_status {
  PATHSPEC_OK = 0,
  PATHSPEC_ERR_INVALID_ARGUMENT = 1,
  PATHSPEC_ERR_DEGREE_ZERO = 2,
  PATHSPEC_ERR_PRECISION_EXHAUSTED = 3,
  PATHSPEC_ERR_DEGENERATE_GEOMETRY = 4,
  PATHSPEC_ERR_NON_INTEGRAL = 5,
  PATHSPEC_ERR_BUFFER_TOO_SMALL = 6,
  PATHSPEC_ERR_INTERNAL = 7
} pathspec_status;

PATHSPEC_API const char* pathspec_version(void);
PATHSPEC_API const char* pathspec_status_name(pathspec_status status);
PATHSPEC_API const char* pathspec_last_error(void);

/* ---- sequences ---------------------------------------------------------- */

PATHSPEC_API pathspec_status pathspec_fibonacci(unsigned long n, char* buffer, size_t capacity, size_t* needed);
PATHSPEC_API pathspec_status pathspec_pell(unsigned long n, char* buffer, size_t capacity, size_t* needed);
PATHSPEC_API pathspec_status pathspec_binomial(unsigned long n, unsigned long k, char* buffer, size_t capacity,
                                               size_t* needed);

/* ---- polynomials -------------------------------------------------------- */

typedef struct pathspec_poly pathspec_poly;

typedef enum pathspec_poly_family {
  PATHSPEC_POLY_PATH = 0,           /* f_n, closed formula */
  PATHSPEC_POLY_PATH_RECURSIVE = 1, /* f_n, three-term recurrence */
  PATHSPEC_POLY_CYCLE = 2,          /* det(A(C_n) - xI), n >= 3 */
  PATHSPEC_POLY_CHEBYSHEV_U = 3,
  PATHSPEC_POLY_CHEBYSHEV_T = 4,
  PATHSPEC_POLY_U_NEG_HALF = 5      /* U_n(-x/2), integrality checked */
} pathspec_poly_family;

PATHSPEC_API pathspec_status pathspec_poly_create(pathspec_poly_family family, unsigned long n, pathspec_poly** out);
/* Parses "c0 c1 ... cn". */
PATHSPEC_API pathspec_status pathspec_poly_parse(const char* text, pathspec_poly** out);
PATHSPEC_API void pathspec_poly_free(pathspec_poly* poly);

PATHSPEC_API size_t pathspec_poly_degree(const pathspec_poly* poly);
PATHSPEC_API int pathspec_poly_equal(const pathspec_poly* a, const pathspec_poly* b);
/* Coefficient serialization "c0 c1 ... cn", lowest degree first. */
PATHSPEC_API pathspec_status pathspec_poly_serialize(const pathspec_poly* poly, char* buffer, size_t capacity,
                                                     size_t* needed);
/* Human-readable form in the variable `var` (UTF-8), e.g. "-λ^3 + 3λ + 2". */
PATHSPEC_API pathspec_status pathspec_poly_pretty(const pathspec_poly* poly, const char* var, char* buffer,
                                                  size_t capacity, size_t* needed);

/* ---- roots -------------------------------------------------------------- */

typedef struct pathspec_solve_config {
  double tolerance;        /* relative residual / precision drift, default 1e-12 */
  unsigned start_bits;     /* default 128 */
  unsigned max_bits;       /* default 16384 */
  unsigned max_iterations; /* Aberth sweeps per precision level, default 2000 */
} pathspec_solve_config;

PATHSPEC_API void pathspec_solve_config_init(pathspec_solve_config* cfg);

typedef struct pathspec_root {
  double re;
  double im;
  double residual;       /* |p(z)| / max_k |c_k| max(1,|z|)^k */
  double error_estimate; /* drift between the last two precision levels */
  int coincident;        /* nonzero when within error of another root */
} pathspec_root;

typedef struct pathspec_rootset pathspec_rootset;

/* Roots of f_n(x) - c. `c_decimal` NULL means c = F_{n+1}; `cfg` NULL means defaults. */
PATHSPEC_API pathspec_status pathspec_solve(unsigned long n, const char* c_decimal, const pathspec_solve_config* cfg,
                                            pathspec_rootset** out);
PATHSPEC_API void pathspec_rootset_free(pathspec_rootset* roots);
PATHSPEC_API size_t pathspec_rootset_size(const pathspec_rootset* roots);
PATHSPEC_API pathspec_status pathspec_rootset_get(const pathspec_rootset* roots, size_t index, pathspec_root* out);
PATHSPEC_API double pathspec_rootset_residual_bound(const pathspec_rootset* roots);
PATHSPEC_API unsigned pathspec_rootset_precision_bits(const pathspec_rootset* roots);
/* Decimal string of the shift constant the set was solved for. */
PATHSPEC_API pathspec_status pathspec_rootset_constant(const pathspec_rootset* roots, char* buffer, size_t capacity,
                                                       size_t* needed);

/* Exact (Sturm) count of distinct real roots of f_n(x) - c. */
PATHSPEC_API pathspec_status pathspec_real_root_count(unsigned long n, const char* c_decimal, unsigned long* count,
                                                      unsigned long* negative_count);

/* ---- ellipse fit -------------------------------------------------------- */

typedef struct pathspec_point {
  double re;
  double im;
} pathspec_point;

typedef struct pathspec_ellipse_fit {
  double coeff_a; /* Ã in Ã x^2 + B̃ y^2 = 1 */
  double coeff_b; /* B̃ */
  double a_tilde; /* 1/sqrt(Ã) */
  double b_tilde; /* 1/sqrt(B̃) */
  double rmse;
  double eccentricity;
} pathspec_ellipse_fit;

PATHSPEC_API pathspec_status pathspec_fit_ellipse(const pathspec_point* points, size_t count,
                                                  pathspec_ellipse_fit* out);
PATHSPEC_API pathspec_status pathspec_rmse(const pathspec_point* points, size_t count, double a, double b,
                                           double* out);
PATHSPEC_API pathspec_status pathspec_eccentricity(double a, double b, double* out);

/* ---- verification ------------------------------------------------------- */

typedef struct pathspec_report_list pathspec_report_list;

/* Suites: lemma, imaginary, realcount, containment, eq1, pell, conjecture,
 * cycle, all. Orders n in [n_min, n_max]; suites over n = 4k use the
 * multiples of 4 in that range. `c_decimal` replaces F_{n+1} and is
 * accepted by the containment suite only; pass NULL otherwise. */
PATHSPEC_API int pathspec_is_suite(const char* name);
PATHSPEC_API pathspec_status pathspec_verify(const char* suite, unsigned long n_min, unsigned long n_max,
                                             double tolerance, const char* c_decimal,
                                             const pathspec_solve_config* cfg, pathspec_report_list** out);
PATHSPEC_API void pathspec_report_list_free(pathspec_report_list* list);
PATHSPEC_API size_t pathspec_report_list_size(const pathspec_report_list* list);
PATHSPEC_API int pathspec_report_passed(const pathspec_report_list* list, size_t index);
PATHSPEC_API int pathspec_report_asserted(const pathspec_report_list* list, size_t index);
/* Name of the check; owned by the list. NULL for an out-of-range index. */
PATHSPEC_API const char* pathspec_report_name(const pathspec_report_list* list, size_t index);
/* The full report as a JSON object; owned by the list. */
PATHSPEC_API const char* pathspec_report_json(const pathspec_report_list* list, size_t index);

/* max_k |Re^2/5 + Im^2 - 1| over the roots of f_n(x) = F_{n+1}, n >= 3. */
PATHSPEC_API pathspec_status pathspec_boundary_residual(unsigned long n, const pathspec_solve_config* cfg,
                                                        double* out);

/* ---- sweeps ------------------------------------------------------------- */

typedef struct pathspec_sweep_row {
  unsigned long n;
  double a_tilde;
  double b_tilde;
  double rmse;
  double eccentricity;
  double boundary_residual;
  double max_re;
  double max_im;
  unsigned precision_bits;
  int solved;         /* roots available (boundary_residual, max_re, max_im valid) */
  int fitted;         /* ellipse columns valid */
  pathspec_status error; /* PATHSPEC_OK, or why the row is incomplete */
} pathspec_sweep_row;

typedef struct pathspec_sweep pathspec_sweep;

/* Rows for n = n_min, n_min + step, ... <= n_max in ascending order. Per-row
 * failures are recorded in the row; the call itself fails only on invalid
 * arguments. `c_decimal` NULL means c = F_{n+1}. */
PATHSPEC_API pathspec_status pathspec_sweep_run(unsigned long n_min, unsigned long n_max, unsigned long step,
                                                const char* c_decimal, const pathspec_solve_config* cfg,
                                                pathspec_sweep** out);
PATHSPEC_API void pathspec_sweep_free(pathspec_sweep* sweep);
PATHSPEC_API size_t pathspec_sweep_size(const pathspec_sweep* sweep);
PATHSPEC_API pathspec_status pathspec_sweep_get(const pathspec_sweep* sweep, size_t index, pathspec_sweep_row* out);

#ifdef __cplusplus
}
#endif

#endif /* PATHSPEC_PATHSPEC_H */
