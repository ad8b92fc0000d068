/*
 * Copyright 2026 The nncp Authors
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

/* C interface to the nncp solver. Strings returned through char** belong to
 * the caller and must be released with nncp_string_free. On failure the
 * message of the most recent error on the calling thread is available from
 * nncp_last_error. Qubit and location ids are 1-based throughout. */

#ifndef NNCP_H_
#define NNCP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define NNCP_API __declspec(dllexport)
#else
#define NNCP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct nncp_circuit nncp_circuit;
typedef struct nncp_coupling nncp_coupling;
typedef struct nncp_report nncp_report;

/* Values 1-4 double as CLI exit codes. */
typedef enum nncp_status {
  NNCP_OK = 0,
  NNCP_ERR_PARSE = 1,
  NNCP_ERR_CAP = 2,
  NNCP_ERR_SOLVER = 3,
  NNCP_ERR_VERIFY = 4,
  NNCP_ERR_INVALID_ARGUMENT = 5,
  NNCP_ERR_INTERNAL = 6
} nncp_status;

typedef enum nncp_method {
  NNCP_METHOD_REDUCED = 0,
  NNCP_METHOD_BASELINE = 1,
  NNCP_METHOD_DP = 2,
  NNCP_METHOD_ALL = 3
} nncp_method;

typedef enum nncp_format { NNCP_FORMAT_JSON = 0, NNCP_FORMAT_CSV = 1, NNCP_FORMAT_HUMAN = 2 } nncp_format;

typedef enum nncp_model { NNCP_MODEL_RSPP = 0, NNCP_MODEL_GNFP = 1 } nncp_model;

typedef struct nncp_options {
  nncp_method method;
  uint64_t node_cap; /* orbit cap for the quotient graph */
  uint64_t aut_cap;  /* element cap for general automorphism groups */
} nncp_options;

NNCP_API const char* nncp_version(void);
NNCP_API const char* nncp_last_error(void);
NNCP_API void nncp_string_free(char* s);
NNCP_API void nncp_options_init(nncp_options* opt);

/* Parses .real text and decomposes it into two-qubit gates. alias_tokens and
 * alias_kinds (e.g. "peres" -> "PERES") extend the token table; both may be
 * NULL when alias_count is 0. */
NNCP_API nncp_status nncp_circuit_parse(const char* text, const char* const* alias_tokens,
                                        const char* const* alias_kinds, size_t alias_count,
                                        nncp_circuit** out);
NNCP_API nncp_status nncp_circuit_load(const char* path, nncp_circuit** out);
NNCP_API void nncp_circuit_free(nncp_circuit* c);
NNCP_API size_t nncp_circuit_qubits(const nncp_circuit* c);
NNCP_API size_t nncp_circuit_gates(const nncp_circuit* c);
/* Gate k is 0-based; the qubits come back 1-based with q1 < q2. */
NNCP_API nncp_status nncp_circuit_gate(const nncp_circuit* c, size_t k, uint32_t* q1, uint32_t* q2);
/* {"schema":1,"n":..,"qubits":[names],"gates":[[q1,q2],...]} */
NNCP_API nncp_status nncp_circuit_json(const nncp_circuit* c, char** out);

/* Descriptor: "cycle", "star", "biclique:M" or "file:<path>". opt may be NULL. */
NNCP_API nncp_status nncp_coupling_create(const char* descriptor, size_t n, const nncp_options* opt,
                                          nncp_coupling** out);
NNCP_API void nncp_coupling_free(nncp_coupling* g);

NNCP_API nncp_status nncp_stats(const nncp_circuit* c, const nncp_coupling* g, const nncp_options* opt,
                                nncp_format format, const char* name, char** out);

NNCP_API nncp_status nncp_solve(const nncp_circuit* c, const nncp_coupling* g, const nncp_options* opt,
                                nncp_report** out);
NNCP_API void nncp_report_free(nncp_report* r);
NNCP_API long nncp_report_opt(const nncp_report* r);
NNCP_API nncp_status nncp_report_format(const nncp_report* r, nncp_format format, const char* name,
                                        char** out);
/* {"schema":1,"opt":..,"orders":[[..]],"swaps":[{"after_gate":k,"swap":[i,j]}]} */
NNCP_API nncp_status nncp_report_solution(const nncp_report* r, char** out);

/* Returns NNCP_ERR_VERIFY when the schedule is invalid; the report JSON is
 * produced either way when out is not NULL. */
NNCP_API nncp_status nncp_verify(const char* solution_json, const nncp_circuit* c, const nncp_coupling* g,
                                 char** out);

/* cls is 1 or 2. */
NNCP_API nncp_status nncp_random(int cls, size_t n, size_t m, uint64_t seed, char** out);

NNCP_API nncp_status nncp_export_lp(const nncp_circuit* c, const nncp_coupling* g, const nncp_options* opt,
                                    nncp_model model, char** out);

#ifdef __cplusplus
}
#endif

#endif /* NNCP_H_ */
