/*
   Copyright 2026 The fforder Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FFORDER_H_
#define FFORDER_H_

/*
 * C interface to libfforder.
 *
 * Every fallible call returns an ff_status; on failure ff_last_error() holds
 * a message for the calling thread. Handles are opaque and owned by the
 * caller; release them with the matching *_destroy function (NULL is a
 * no-op). Text and JSON results come back in ff_buffer objects. Exact
 * integers are returned as decimal strings.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FFORDER_API __declspec(dllexport)
#elif defined(FFORDER_BUILDING)
#define FFORDER_API __attribute__((visibility("default")))
#else
#define FFORDER_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ff_status {
  FF_OK = 0,
  FF_ERR_NON_PRIME = 1,
  FF_ERR_CARDINALITY_OVERFLOW = 2,
  FF_ERR_ZERO_POLYNOMIAL = 3,
  FF_ERR_ZERO_ELEMENT = 4,
  FF_ERR_OVERFLOW = 5,
  FF_ERR_IDENTITY_CLASS = 6,
  FF_ERR_NO_PRIMITIVE_ROOT = 7,
  FF_ERR_BUDGET_EXCEEDED = 8,
  FF_ERR_DEGREE_CAP = 9,
  FF_ERR_DEGREE_TOO_SMALL = 10,
  FF_ERR_NOT_IRREDUCIBLE = 11,
  FF_ERR_BASE_FIELD_ELEMENT = 12,
  FF_ERR_STRUCTURE_VIOLATION = 13,
  FF_ERR_PRECONDITION = 14,
  FF_ERR_ENUMERATION_CAP = 15,
  FF_ERR_LENGTH_MISMATCH = 16,
  FF_ERR_ORDER_WIDTH = 17,
  FF_ERR_PARSE = 18,
  FF_ERR_R_TOO_SMALL = 19,
  FF_ERR_FIELD_MISMATCH = 20,
  FF_ERR_INVALID_ARGUMENT = 21,
  FF_ERR_INTERNAL = 22
} ff_status;

typedef struct ff_field ff_field;
typedef struct ff_matrix ff_matrix;
typedef struct ff_buffer ff_buffer;

typedef struct ff_caps {
  uint64_t degree;      /* max degree of F_{A,r} */
  uint64_t enumeration; /* max |I_{s,t,m}| to enumerate */
  uint64_t injectivity; /* experiments check Lambda up to this size */
  uint32_t order_bits;  /* max bit width of q^n - 1 */
} ff_caps;

typedef struct ff_istm_params {
  uint32_t D;
  uint32_t s;
  uint32_t t;
  uint32_t m;
} ff_istm_params;

typedef struct ff_verify_summary {
  uint64_t checked;
  uint64_t violations;
} ff_verify_summary;

typedef struct ff_experiment_config {
  const char* field;        /* "p" or "p^k" */
  const char* matrix;       /* "a,b,c,d" */
  const uint32_t* r_values;
  size_t r_count;
  const char* alpha;        /* "default", "all", "sample:n", "list:a;b" or NULL */
  uint64_t seed;
  ff_caps caps;
} ff_experiment_config;

typedef struct ff_experiment_summary {
  uint64_t records;
  uint64_t applicable;
  uint64_t passed;
  uint64_t order_violations;
  uint64_t injectivity_failures;
  uint64_t structure_violations;
} ff_experiment_summary;

FFORDER_API const char* ff_version(void);
FFORDER_API const char* ff_status_name(ff_status status);
/* Message of the last failed call on this thread, "" when none. */
FFORDER_API const char* ff_last_error(void);

FFORDER_API void ff_caps_default(ff_caps* out);
/* Applies "degree=N,enum=N,inject=N,order_bits=N" (any subset) to *caps. */
FFORDER_API ff_status ff_caps_parse(const char* text, ff_caps* caps);

FFORDER_API const char* ff_buffer_data(const ff_buffer* buffer);
FFORDER_API size_t ff_buffer_size(const ff_buffer* buffer);
FFORDER_API void ff_buffer_destroy(ff_buffer* buffer);

/* Fields. */
FFORDER_API ff_status ff_field_parse(const char* spec, ff_field** out);
FFORDER_API void ff_field_destroy(ff_field* field);
FFORDER_API uint64_t ff_field_order(const ff_field* field);
FFORDER_API ff_status ff_field_describe(const ff_field* field, ff_buffer** out);

/* Matrices in GL_2(F_q). */
FFORDER_API ff_status ff_matrix_parse(const ff_field* field, const char* text, ff_matrix** out);
FFORDER_API void ff_matrix_destroy(ff_matrix* matrix);
FFORDER_API ff_status ff_matrix_format(const ff_matrix* matrix, ff_buffer** out);
/* Order D of the class in PGL_2. */
FFORDER_API ff_status ff_matrix_order(const ff_matrix* matrix, uint64_t* out);
/* Case tag as JSON. */
FFORDER_API ff_status ff_matrix_classify(const ff_matrix* matrix, ff_buffer** out);
FFORDER_API ff_status ff_matrix_shift(const ff_matrix* matrix, const char* alpha, ff_matrix** out);

/* Exponent sets I_{s,t,m} and bounds. */
FFORDER_API ff_status ff_count_istm(const ff_istm_params* params, ff_buffer** out);
FFORDER_API ff_status ff_enumerate_count(const ff_istm_params* params, uint64_t cap, uint64_t* out);
/* item is 'a', 'b' or 'c'; the value has 12 significant digits. */
FFORDER_API ff_status ff_closed_form_bound(char item, uint32_t D, uint32_t r, ff_buffer** out);
/* which is 1 or 2. */
FFORDER_API ff_status ff_asymptotic_floor(int which, uint32_t D, uint32_t r, double eps, ff_buffer** out);
FFORDER_API ff_status ff_bound_report(const ff_matrix* matrix, uint32_t r, ff_buffer** out);
FFORDER_API ff_status ff_certified_bound(const ff_matrix* matrix, uint32_t r, ff_buffer** out);

/* Factorization census of F_{A,r} as JSON. caps may be NULL. */
FFORDER_API ff_status ff_census(const ff_matrix* matrix, uint32_t r, const ff_caps* caps, uint64_t seed,
                                ff_buffer** out);

/* Verification suites. Details (JSON) go to *details when it is not NULL. */
FFORDER_API ff_status ff_verify_lemmas(const ff_field* field, uint64_t sample_budget, uint64_t seed,
                                       ff_verify_summary* summary, ff_buffer** details);
FFORDER_API ff_status ff_verify_proposition(uint32_t D_max, uint32_t r_max, ff_verify_summary* summary,
                                            ff_buffer** details);
FFORDER_API ff_status ff_verify_census(const ff_matrix* matrix, uint32_t r, const ff_caps* caps,
                                       uint64_t seed, ff_verify_summary* summary, ff_buffer** details);

/* Runs the experiment and returns the JSON-lines text (schema header first). */
FFORDER_API ff_status ff_experiment_run(const ff_experiment_config* config, ff_experiment_summary* summary,
                                        ff_buffer** jsonl);

#ifdef __cplusplus
}
#endif

#endif  // FFORDER_H_
