// Copyright 2026 The qchan Authors
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

/* C interface to qchan: quantum channel entropies, entropic bounds and
 * separability tests.
 *
 * Channels are opaque handles released with qchan_channel_free. Functions
 * return a qchan_status; on failure qchan_last_error() describes the problem
 * (thread-local, valid until the next call on the same thread). Strings
 * returned through char** are owned by the caller and released with
 * qchan_string_free. Renyi order infinity is passed as INFINITY. Complex
 * arrays are interleaved (re, im) in row-major order. */

#ifndef QCHAN_QCHAN_H
#define QCHAN_QCHAN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(QCHAN_BUILDING_LIBRARY)
#define QCHAN_API __declspec(dllexport)
#else
#define QCHAN_API __declspec(dllimport)
#endif
#else
#define QCHAN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qchan_status {
  QCHAN_OK = 0,
  QCHAN_ERR_DIMENSION = 1,
  QCHAN_ERR_VALIDATION = 2,
  QCHAN_ERR_DOMAIN = 3,
  QCHAN_ERR_NUMERICAL = 4,
  QCHAN_ERR_PARSE = 5,
  QCHAN_ERR_IO = 6,
  QCHAN_ERR_INVALID_ARGUMENT = 7,
  QCHAN_ERR_INTERNAL = 8
} qchan_status;

typedef struct qchan_channel qchan_channel;

QCHAN_API const char* qchan_version(void);
QCHAN_API const char* qchan_last_error(void);
QCHAN_API const char* qchan_status_name(qchan_status status);
QCHAN_API void qchan_string_free(char* text);

/* Construction. */
QCHAN_API qchan_status qchan_channel_from_spec_json(const char* json, qchan_channel** out);
QCHAN_API qchan_status qchan_channel_from_spec_file(const char* path, qchan_channel** out);
/* `superop` holds 2 * n^4 doubles. */
QCHAN_API qchan_status qchan_channel_from_superoperator(size_t n, const double* superop, int permissive,
                                                        qchan_channel** out);
/* `ops` holds count * 2 * n^2 doubles, one n x n operator after another. */
QCHAN_API qchan_status qchan_channel_from_kraus(size_t n, size_t count, const double* ops,
                                                qchan_channel** out);
QCHAN_API void qchan_channel_free(qchan_channel* ch);

/* Accessors. Matrix getters need capacity >= 2 * n^4 doubles. */
QCHAN_API size_t qchan_channel_dim(const qchan_channel* ch);
QCHAN_API qchan_status qchan_channel_label(const qchan_channel* ch, char** out);
QCHAN_API qchan_status qchan_channel_superoperator(const qchan_channel* ch, double* out, size_t capacity);
QCHAN_API qchan_status qchan_channel_choi(const qchan_channel* ch, double* out, size_t capacity);

/* Entropies at Renyi order q >= 0. */
QCHAN_API qchan_status qchan_map_entropy(const qchan_channel* ch, double q, double* out);
QCHAN_API qchan_status qchan_receiver_entropy(const qchan_channel* ch, double q, double* out);
QCHAN_API qchan_status qchan_output_entropy(const qchan_channel* ch, double q, double* out);

typedef struct qchan_quantities {
  double sigma1;     /* largest singular value of the superoperator */
  double tau1;       /* largest eigenvalue of Phi(1/N) */
  double d1;         /* largest eigenvalue of the dynamical matrix */
  double lambda_phi; /* trace norm of the superoperator */
} qchan_quantities;

QCHAN_API qchan_status qchan_channel_quantities(const qchan_channel* ch, qchan_quantities* out);

/* JSON documents. */
QCHAN_API qchan_status qchan_bound_report_json(const qchan_channel* ch, double q, char** out);
QCHAN_API qchan_status qchan_separability_json(const qchan_channel* ch, double q, char** out);
/* Full analysis over `nq` orders; non-zero `bits` reports the entropy block
 * in bits. `all_satisfied` (optional) receives 1 when every bound holds. */
QCHAN_API qchan_status qchan_analyze(const qchan_channel* ch, const double* qs, size_t nq, int bits, char** out,
                                     int* all_satisfied);

typedef enum qchan_scan_mode { QCHAN_SCAN_ENTROPY_PLANE = 0, QCHAN_SCAN_OUTPUT_PLANE = 1 } qchan_scan_mode;
typedef enum qchan_format { QCHAN_FORMAT_CSV = 0, QCHAN_FORMAT_JSON = 1 } qchan_format;

typedef struct qchan_scan_config {
  qchan_scan_mode mode;
  const char* ensemble;
  size_t n_samples;
  size_t dim;
  double q;
  uint64_t seed;
  qchan_format format;
  size_t threads;      /* 0: hardware concurrency; QCHAN_THREADS caps */
  size_t env_dim;      /* 0: dim^2 */
  size_t mixture_size; /* 0: dim^2 */
} qchan_scan_config;

QCHAN_API void qchan_scan_config_init(qchan_scan_config* cfg);
QCHAN_API qchan_status qchan_scan(const qchan_scan_config* cfg, char** out);
QCHAN_API qchan_status qchan_scan_gnuplot(const qchan_scan_config* cfg, const char* data_path, char** out);

QCHAN_API qchan_status qchan_curve(const char* name, size_t grid, double q, char** out);

/* `injected` may be NULL. `passed` receives 1 when every invariant holds. */
QCHAN_API qchan_status qchan_verify(const char* suite, size_t n, uint64_t seed, size_t threads,
                                    const qchan_channel* injected, char** summary, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* QCHAN_QCHAN_H */
