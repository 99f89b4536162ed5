// Copyright 2026 The avecbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the avec library. All functions return an avec_status;
 * on failure avec_last_error() describes the problem for the calling
 * thread. Strings returned through out-parameters are owned by the caller
 * and released with avec_string_free. */
#ifndef AVEC_AVEC_H_
#define AVEC_AVEC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define AVEC_API __declspec(dllexport)
#else
#define AVEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum avec_status {
  AVEC_OK = 0,
  AVEC_ERR_INVALID_VERTEX = 1,
  AVEC_ERR_INVALID_EDGE = 2,
  AVEC_ERR_INVALID_ARGUMENT = 3,
  AVEC_ERR_DISCONNECTED_GRAPH = 4,
  AVEC_ERR_INVALID_WEIGHTS = 5,
  AVEC_ERR_NOT_PRIME_POWER = 6,
  AVEC_ERR_DIVISION_BY_ZERO = 7,
  AVEC_ERR_INVALID_CHAIN_SPEC = 8,
  AVEC_ERR_OUT_OF_RANGE = 9,
  AVEC_ERR_MISSING_PARAMETER = 10,
  AVEC_ERR_NOT_APPLICABLE = 11,
  AVEC_ERR_NOT_GIRTH_SIX = 12,
  AVEC_ERR_CONSTRUCTION_INVARIANT = 13,
  AVEC_ERR_LEMMA_BOUND_VIOLATED = 14,
  AVEC_ERR_PARSE = 15,
  AVEC_ERR_IO = 16,
  AVEC_ERR_ARITHMETIC_OVERFLOW = 17,
  AVEC_ERR_INTERNAL = 99
} avec_status;

typedef enum avec_format { AVEC_FORMAT_EDGELIST = 0, AVEC_FORMAT_GRAPH6 = 1 } avec_format;
typedef enum avec_report_format { AVEC_REPORT_JSON = 0, AVEC_REPORT_CSV = 1 } avec_report_format;
typedef enum avec_variant { AVEC_VARIANT_GIRTH6 = 0, AVEC_VARIANT_MAXDEG = 1 } avec_variant;

typedef struct avec_graph avec_graph;

AVEC_API const char* avec_last_error(void);
AVEC_API const char* avec_status_name(avec_status status);
AVEC_API void avec_string_free(char* s);

/* edges holds 2*m vertex indices. */
AVEC_API avec_status avec_graph_create(size_t n, const uint32_t* edges, size_t m, avec_graph** out);
AVEC_API void avec_graph_free(avec_graph* g);
/* Edge list or graph6, detected from the text. */
AVEC_API avec_status avec_graph_parse(const char* text, avec_graph** out);
AVEC_API avec_status avec_graph_read(const char* path, avec_graph** out);
AVEC_API avec_status avec_graph_format(const avec_graph* g, avec_format format, char** out);
AVEC_API avec_status avec_graph_write(const avec_graph* g, const char* path, avec_format format);
AVEC_API size_t avec_graph_order(const avec_graph* g);
AVEC_API size_t avec_graph_size(const avec_graph* g);
/* Copies up to 2*capacity indices into edges; returns the edge count. */
AVEC_API size_t avec_graph_edges(const avec_graph* g, uint32_t* edges, size_t capacity);

/* ecc must hold avec_graph_order(g) entries. */
AVEC_API avec_status avec_eccentricities(const avec_graph* g, uint32_t* ecc);
/* Reduced fraction. */
AVEC_API avec_status avec_average_eccentricity(const avec_graph* g, int64_t* num, int64_t* den);
/* *girth is 0 for a forest. */
AVEC_API avec_status avec_girth(const avec_graph* g, uint32_t* girth);
AVEC_API avec_status avec_path_avec(uint64_t n, int64_t* num, int64_t* den);

/* meta may be NULL; otherwise it receives the generator sidecar JSON. */
AVEC_API avec_status avec_gen_reiman(uint64_t q, avec_graph** out, char** meta);
/* head may be NULL for the default first copy; head_u and head_v name its
 * attaching edge. */
AVEC_API avec_status avec_gen_chain(uint32_t delta, uint32_t ell, const avec_graph* head,
                                    uint32_t head_u, uint32_t head_v, avec_graph** out,
                                    char** meta);

/* meta_json may be NULL. *pass is 1 when no bound is violated. */
AVEC_API avec_status avec_analyze(const avec_graph* g, const char* meta_json,
                                  avec_report_format format, char** out, int* pass);
AVEC_API avec_status avec_audit_balls(const avec_graph* g, char** out_json, int* pass);
/* anchor < 0 selects the smallest vertex of maximum degree. */
AVEC_API avec_status avec_replay(const avec_graph* g, avec_variant variant, int64_t anchor,
                                 char** trace_json, int* pass);
AVEC_API avec_status avec_sweep_chain(const uint32_t* deltas, size_t count, uint32_t ell_lo,
                                      uint32_t ell_hi, char** csv, int* pass);

#ifdef __cplusplus
}
#endif

#endif /* AVEC_AVEC_H_ */
