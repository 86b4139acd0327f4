/* Copyright 2026 The boolnorm Authors
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
 *
 */

#ifndef BOOLNORM_BOOLNORM_H
#define BOOLNORM_BOOLNORM_H

/*
 * C interface to libboolnorm.
 *
 * Objects are opaque handles created by bn_*_from_json / bn_reduce and
 * released with the matching bn_*_free. Every fallible call returns a
 * bn_status; on failure a message for the calling thread is available from
 * bn_last_error(). Strings handed out through char** parameters are owned
 * by the caller and released with bn_string_free.
 *
 * Elements cross the boundary as arrays of 1-based generator indices.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BOOLNORM_BUILDING)
#    define BN_API __declspec(dllexport)
#  else
#    define BN_API __declspec(dllimport)
#  endif
#else
#  define BN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bn_status {
  BN_OK = 0,
  BN_ERR_INVALID_ARGUMENT = 1,
  BN_ERR_PARSE = 2,
  BN_ERR_INVALID_SPEC = 3,
  BN_ERR_NOT_IN_SPAN = 4,
  BN_ERR_DEPENDENT_ROWS = 5,
  BN_ERR_K_EXCEEDS_RANK = 6,
  BN_ERR_INDEX_OUT_OF_RANK = 7,
  BN_ERR_RANK_TOO_LARGE = 8,
  BN_ERR_SEARCH_BOUND_EXCEEDED = 9,
  BN_ERR_UNUSABLE_SEQUENCE = 10,
  BN_ERR_SEQUENCE_TOO_SHORT = 11,
  BN_ERR_INVALID_INDEX = 12,
  BN_ERR_INTERNAL = 100
} bn_status;

typedef struct bn_norm bn_norm;
typedef struct bn_basis bn_basis;

typedef struct bn_search_options {
  /* 0 selects the default (24, or BOOLNORM_SEARCH_BOUND when set). */
  uint32_t search_bound;
  int prune;
  uint32_t threads;
} bn_search_options;

typedef struct bn_campaign_config {
  uint32_t rank;
  /* "weighted", "graev" or "closure"; ignored when norm_json is set. */
  const char* family;
  /* Optional fixed norm spec; NULL draws a random norm per trial. */
  const char* norm_json;
  /* Comma-separated subset of L0iii,L1,L2,L3,L4,rebase, or "all". */
  const char* checks;
  uint64_t trials;
  uint64_t seed;
  uint32_t threads;
} bn_campaign_config;

BN_API const char* bn_version(void);
BN_API const char* bn_status_name(bn_status status);
/* Message of the last failed call on this thread ("" if none). */
BN_API const char* bn_last_error(void);
BN_API void bn_string_free(char* s);

/* ---- norms ------------------------------------------------------------ */

BN_API bn_status bn_norm_from_json(const char* spec_json, bn_norm** out);
BN_API void bn_norm_free(bn_norm* norm);
BN_API size_t bn_norm_rank(const bn_norm* norm);
BN_API bn_status bn_norm_eval(const bn_norm* norm, const uint32_t* support, size_t len, double* out);
/* Exhaustive axiom check at `rank` (0 = the norm's rank); *pass is 0 or 1. */
BN_API bn_status bn_norm_check_axioms(const bn_norm* norm, size_t rank, int* pass, char** report_json);

/* ---- bases ------------------------------------------------------------ */

BN_API bn_status bn_basis_from_json(const char* rows_json, bn_basis** out);
BN_API void bn_basis_free(bn_basis* basis);
BN_API size_t bn_basis_rank(const bn_basis* basis);
BN_API bn_status bn_basis_to_json(const bn_basis* basis, char** out);

/* Greedy norm-minimizing basis at `rank`. options may be NULL. When
 * stats_json is non-NULL it receives the basis plus per-row records. */
BN_API bn_status bn_reduce(const bn_norm* norm, size_t rank, const bn_search_options* options, bn_basis** out,
                           char** stats_json);

/* Coordinates of `support` over the basis rows (back-substitution). The
 * caller provides `coords` with room for bn_basis_rank entries. */
BN_API bn_status bn_express(const bn_basis* basis, const uint32_t* support, size_t len, uint32_t* coords,
                            size_t* coords_len);

/* ---- verification and rebasing ---------------------------------------- */

/* Runs the comma-separated checks against basis/norm. *pass is 1 iff no
 * violations were found. */
BN_API bn_status bn_verify(const bn_basis* basis, const bn_norm* norm, const char* checks, int* pass,
                           char** report_json);

/* Normalizes the sequence (JSON array of reduced-coordinate arrays), builds
 * the rebased basis and certifies it. *ok is 1 iff independence holds with
 * the expected rank and every witness lies in its combination. */
BN_API bn_status bn_rebase(const bn_basis* basis, const bn_norm* norm, const char* sequence_json, uint64_t seed,
                           int* ok, char** report_json);

/* Seeded randomized campaign. Outputs the per-trial CSV and a JSON summary;
 * *all_pass is 1 iff every trial passed. */
BN_API bn_status bn_campaign(const bn_campaign_config* config, int* all_pass, char** csv, char** summary_json);

#ifdef __cplusplus
}
#endif

#endif /* BOOLNORM_BOOLNORM_H */
