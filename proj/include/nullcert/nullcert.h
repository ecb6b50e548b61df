/*
 * Copyright 2026 The nullcert Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * nullcert C interface.
 *
 * Every object is an opaque handle released by its *_free function; free
 * functions accept NULL. Functions return an nc_status; on failure the
 * thread-local nc_last_error() describes the problem. Strings returned
 * through char** are heap-allocated and must be released with
 * nc_string_free().
 */

#ifndef NULLCERT_NULLCERT_H
#define NULLCERT_NULLCERT_H

#include <stddef.h>
#include <stdint.h>

#if defined(NULLCERT_BUILDING_LIBRARY)
#define NC_API __attribute__((visibility("default")))
#else
#define NC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nc_status {
  NC_OK = 0,
  NC_ERR_INVALID_ARGUMENT = 1,
  NC_ERR_PARSE = 2,
  NC_ERR_VALIDATION = 3,
  NC_ERR_RESOURCE = 4,
  NC_ERR_VERIFICATION = 5,
  NC_ERR_IO = 6,
  NC_ERR_INTERNAL = 7,
  NC_ERR_INVALID_HANDLE = 8
} nc_status;

/* Values match the command-line exit codes. */
typedef enum nc_verdict {
  NC_INFEASIBLE_PROVEN = 0,
  NC_UNDECIDED = 2,
  NC_FEASIBLE_PROVEN = 3
} nc_verdict;

typedef enum nc_arithmetic { NC_ARITH_EXACT = 0, NC_ARITH_FLOAT = 1 } nc_arithmetic;

/* How multiplier degree is counted: matrix entries only, with gamma worth
 * n entries (default), or plain total degree. */
typedef enum nc_degree_measure { NC_MEASURE_MATRIX = 0, NC_MEASURE_TOTAL = 1 } nc_degree_measure;

typedef struct nc_task nc_task;
typedef struct nc_system nc_system;
typedef struct nc_report nc_report;
typedef struct nc_certificate nc_certificate;

typedef struct nc_search_options {
  unsigned max_degree;
  int gamma_in_beta;
  int w_grading;
  nc_arithmetic arithmetic;
  double float_tol;
  size_t memory_budget; /* bytes, 0 = unlimited */
  nc_degree_measure measure;
} nc_search_options;

typedef struct nc_reproduce_options {
  unsigned samples;   /* 0 = suite default */
  uint64_t seed;
  int max_degree;     /* negative = suite default */
  int extended;
  unsigned workers;
  size_t memory_budget;
  const char* out_dir; /* NULL = keep certificates in memory */
} nc_reproduce_options;

NC_API const char* nc_version(void);
NC_API const char* nc_status_string(nc_status status);
NC_API const char* nc_last_error(void);
NC_API void nc_string_free(char* s);

/* Tasks */
NC_API nc_status nc_task_parse(const char* text, nc_task** out);
NC_API nc_status nc_task_load(const char* path, nc_task** out);
NC_API nc_status nc_task_canonicalize(unsigned n, unsigned m, const char* target_state, nc_task** out);
NC_API nc_status nc_task_serialize(const nc_task* task, char** out);
NC_API nc_status nc_task_digest(const nc_task* task, char** out);
NC_API nc_status nc_task_is_multi(const nc_task* task, int* out);
NC_API void nc_task_free(nc_task* task);

/* Compilation */
NC_API nc_status nc_compile(const nc_task* task, nc_system** out);
NC_API nc_status nc_system_serialize(const nc_system* system, char** out);
NC_API nc_status nc_system_equation_count(const nc_system* system, size_t* out);
NC_API nc_status nc_system_variable_count(const nc_system* system, size_t* out);
NC_API void nc_system_free(nc_system* system);

/* Certificate search; defaults honor NULLA_MEMORY_BUDGET. */
NC_API void nc_search_options_default(nc_search_options* out);
NC_API nc_status nc_certify(const nc_task* task, const nc_search_options* options, nc_report** out);
NC_API nc_status nc_report_verdict(const nc_report* report, nc_verdict* out);
NC_API nc_status nc_report_json(const nc_report* report, char** out);
/* *out is NULL when the report carries no certificate. */
NC_API nc_status nc_report_certificate(const nc_report* report, nc_certificate** out);
NC_API nc_status nc_report_resource_abort(const nc_report* report, int* out);
NC_API void nc_report_free(nc_report* report);

/* Certificates */
NC_API nc_status nc_certificate_parse(const char* text, nc_certificate** out);
NC_API nc_status nc_certificate_serialize(const nc_certificate* cert, char** out);
NC_API nc_status nc_certificate_degree(const nc_certificate* cert, unsigned* out);
NC_API void nc_certificate_free(nc_certificate* cert);
/* *ok is 1 when the identity holds; otherwise *diagnostic (if non-NULL)
 * receives the first offending monomial. */
NC_API nc_status nc_verify(const nc_task* task, const nc_certificate* cert, int* ok, char** diagnostic);

/* Bounds, random targets, reproduction */
NC_API nc_status nc_bounds_json(unsigned n, unsigned m, unsigned modes, unsigned herald_modes, unsigned max_degree,
                                char** out);
NC_API nc_status nc_bounds_text(unsigned n, unsigned m, unsigned modes, unsigned herald_modes, unsigned max_degree,
                                char** out);
NC_API nc_status nc_random_target(unsigned photons, unsigned modes, uint64_t seed, uint64_t denom_bound, char** out);
NC_API void nc_reproduce_options_default(nc_reproduce_options* out);
NC_API nc_status nc_reproduce(const char* suite, const nc_reproduce_options* options, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* NULLCERT_NULLCERT_H */
