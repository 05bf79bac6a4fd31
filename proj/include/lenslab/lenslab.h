// Copyright 2026 The lenslab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to lenslab. Every function returning lenslab_status stores a
 * message retrievable with lenslab_last_error() on failure. Strings returned
 * through char** are owned by the caller and released with
 * lenslab_string_free(). */

#ifndef LENSLAB_LENSLAB_H_
#define LENSLAB_LENSLAB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LENSLAB_API __declspec(dllexport)
#else
#define LENSLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lenslab_status {
  LENSLAB_OK = 0,
  LENSLAB_INVALID_ARGUMENT = 1,
  LENSLAB_NOT_COPRIME = 2,
  LENSLAB_DEGENERATE = 3,
  LENSLAB_OVERFLOW = 4,
  LENSLAB_NOT_DIVISIBLE = 5,
  LENSLAB_ASYMMETRIC_FOLDING = 6,
  LENSLAB_ODD_MIDDLE_COEFFICIENT = 7,
  LENSLAB_NO_COPRIME_LIFT = 8,
  LENSLAB_NOT_FLAT_ALTERNATING = 9,
  LENSLAB_NOT_FLAT = 10,
  LENSLAB_CONFLICTING_ARROWS = 11,
  LENSLAB_WINDOW_TOO_SMALL = 12,
  LENSLAB_GOLDEN_MISMATCH = 13,
  LENSLAB_INTERNAL = 99
} lenslab_status;

typedef enum lenslab_source {
  LENSLAB_SOURCE_TORUS = 0,
  LENSLAB_SOURCE_TYPE_A = 1,
  LENSLAB_SOURCE_IST = 2
} lenslab_source;

typedef enum lenslab_grid_kind {
  LENSLAB_GRID_AUTO = 0,
  LENSLAB_GRID_A = 1,
  LENSLAB_GRID_B = 2
} lenslab_grid_kind;

typedef enum lenslab_format {
  LENSLAB_FORMAT_ASCII = 0,
  LENSLAB_FORMAT_SVG = 1
} lenslab_format;

typedef struct lenslab_param {
  int64_t p;
  int64_t k;
  int64_t k2;
  int64_t q;
  int e;
  int64_t c;
  int64_t m;
} lenslab_param;

typedef struct lenslab_window {
  int64_t i_min;
  int64_t i_max;
  int64_t j_min;
  int64_t j_max;
} lenslab_window;

typedef struct lenslab_knot lenslab_knot;
typedef struct lenslab_report lenslab_report;
typedef struct lenslab_sweep lenslab_sweep;

LENSLAB_API const char* lenslab_status_name(lenslab_status status);
/* Message of the last failure on the calling thread. */
LENSLAB_API const char* lenslab_last_error(void);
LENSLAB_API void lenslab_string_free(char* s);

LENSLAB_API lenslab_status lenslab_normalize(int64_t p, int64_t k,
                                             lenslab_param* out);
LENSLAB_API lenslab_status lenslab_param_json(int64_t p, int64_t k, char** out);

/* Knot class of (p, k) built by the chosen construction. */
LENSLAB_API lenslab_status lenslab_knot_create(int64_t p, int64_t k,
                                               lenslab_source source,
                                               lenslab_knot** out);
/* Torus reduction with an explicit lift l of k^-1. */
LENSLAB_API lenslab_status lenslab_knot_create_lift(int64_t p, int64_t k,
                                                    int64_t l,
                                                    lenslab_knot** out);
LENSLAB_API void lenslab_knot_destroy(lenslab_knot* knot);
LENSLAB_API lenslab_status lenslab_knot_text(const lenslab_knot* knot,
                                             char** out);
LENSLAB_API lenslab_status lenslab_knot_json(const lenslab_knot* knot,
                                             char** out);
/* Lines "poly:", "NS_h:", "g:", "alpha:", "AS:". Returns
 * LENSLAB_NOT_FLAT_ALTERNATING (with the poly line still written) when the
 * polynomial fails the screen. */
LENSLAB_API lenslab_status lenslab_knot_summary(const lenslab_knot* knot,
                                                char** out);
LENSLAB_API int lenslab_knot_flat_alternating(const lenslab_knot* knot);
LENSLAB_API int64_t lenslab_knot_genus(const lenslab_knot* knot);
/* Borrowed view of the coefficients; coefficient n is t^(min_exp + n). */
LENSLAB_API lenslab_status lenslab_knot_coefficients(const lenslab_knot* knot,
                                                     int64_t* min_exp,
                                                     const int64_t** coeffs,
                                                     size_t* count);

/* Renders the lattice and its curve. window may be NULL for the default. */
LENSLAB_API lenslab_status lenslab_trace(int64_t p, int64_t k,
                                         lenslab_grid_kind kind,
                                         const lenslab_window* window,
                                         lenslab_format format, char** out);

LENSLAB_API lenslab_status lenslab_verify(int64_t p, int64_t k,
                                          lenslab_source source,
                                          lenslab_report** out);
LENSLAB_API void lenslab_report_destroy(lenslab_report* report);
/* One JSON object on a single line. */
LENSLAB_API lenslab_status lenslab_report_json(const lenslab_report* report,
                                               char** out);
LENSLAB_API lenslab_status lenslab_report_tsv(const lenslab_report* report,
                                              char** out);
LENSLAB_API const char* lenslab_report_tsv_header(void);
LENSLAB_API void lenslab_report_counts(const lenslab_report* report,
                                       size_t* pass, size_t* fail,
                                       size_t* skip);

/* threads == 0 honours LENSLAB_THREADS. */
LENSLAB_API lenslab_status lenslab_verify_sweep(int64_t p_max,
                                                lenslab_source source,
                                                unsigned threads,
                                                lenslab_sweep** out);
/* Reports on corrupted inputs, each expected to contain failures. */
LENSLAB_API lenslab_status lenslab_self_test(lenslab_sweep** out);
LENSLAB_API size_t lenslab_sweep_size(const lenslab_sweep* sweep);
/* Borrowed; valid until the sweep is destroyed. */
LENSLAB_API const lenslab_report* lenslab_sweep_at(const lenslab_sweep* sweep,
                                                   size_t index);
LENSLAB_API void lenslab_sweep_destroy(lenslab_sweep* sweep);

LENSLAB_API lenslab_status lenslab_table_tsv(int which, char** out);
/* LENSLAB_GOLDEN_MISMATCH with one line per differing cell in *diff. */
LENSLAB_API lenslab_status lenslab_table_compare(int which, const char* golden,
                                                 char** diff);

#ifdef __cplusplus
}
#endif

#endif /* LENSLAB_LENSLAB_H_ */
