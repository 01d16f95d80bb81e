/*
 * Copyright 2026 The qheat Authors
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
 * qheat.h - C interface to the qutrit heat-transport simulator.
 *
 * All functions return a qheat_status. On failure a human-readable message
 * is available from qheat_last_error() until the next call on the same
 * thread. Strings returned through char** must be released with
 * qheat_string_free(). Handles are not shared between threads unless
 * only const functions are called on them.
 */

#ifndef QHEAT_QHEAT_H
#define QHEAT_QHEAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QHEAT_BUILDING_LIBRARY)
#    define QHEAT_API __declspec(dllexport)
#  else
#    define QHEAT_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__)
#  define QHEAT_API __attribute__((visibility("default")))
#else
#  define QHEAT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qheat_status {
  QHEAT_OK = 0,
  QHEAT_ERR_INVALID_ARGUMENT = 1,
  QHEAT_ERR_INVALID_FLUX = 2,
  QHEAT_ERR_NONPOSITIVE_FREQUENCY = 3,
  QHEAT_ERR_CHANNEL_MISMATCH = 4,
  QHEAT_ERR_INCONSISTENT_BATH = 5,
  QHEAT_ERR_REDUCIBLE_CHAIN = 6,
  QHEAT_ERR_UNDEFINED_COEFFICIENT = 7,
  QHEAT_ERR_AMBIGUOUS_EXTREMUM = 8,
  QHEAT_ERR_CONFIG = 9,
  QHEAT_ERR_IO = 10,
  QHEAT_ERR_INTERNAL = 99
} qheat_status;

typedef enum qheat_regime {
  QHEAT_REGIME_NONE = 0,
  QHEAT_REGIME_R_A = 1,
  QHEAT_REGIME_R_B = 2,
  QHEAT_REGIME_R_C = 3,
  QHEAT_REGIME_P_A = 4,
  QHEAT_REGIME_P_B = 5,
  QHEAT_REGIME_P_C = 6,
  QHEAT_REGIME_UNDEFINED = -1 /* tied temperature extremum */
} qheat_regime;

typedef struct qheat_config qheat_config;
typedef struct qheat_sweep qheat_sweep;

typedef struct qheat_spectrum {
  double omega0;
  double omega10;
  double omega21;
  double omega20;
  double omega32;
} qheat_spectrum;

typedef struct qheat_steady_report {
  double p[3];
  double j[3];        /* per channel a, b, c; positive = out of the bath */
  double scale;       /* gross energy flow, round-off reference for j */
  double residual;
  int regime;         /* qheat_regime */
  int hybrid;         /* nonzero when both R and P labels applied */
} qheat_steady_report;

typedef struct qheat_stochastic_report {
  double p[3];
  double sigma_p[3];
  double j[3];
  double sigma_j[3];
  uint64_t n_jumps;
  uint64_t seed;
} qheat_stochastic_report;

typedef struct qheat_sweep_summary {
  size_t rows;
  size_t undefined;   /* undefined coefficient entries */
  size_t errors;      /* rows whose evaluation failed */
  double wall_seconds;
} qheat_sweep_summary;

QHEAT_API const char* qheat_version(void);
QHEAT_API const char* qheat_status_name(qheat_status status);
QHEAT_API const char* qheat_last_error(void);
QHEAT_API void qheat_string_free(char* s);

/* Comma-separated list of preset names. Static storage. */
QHEAT_API const char* qheat_preset_names(void);

/* Configuration ------------------------------------------------------- */

QHEAT_API qheat_status qheat_config_create(qheat_config** out);
QHEAT_API qheat_status qheat_config_from_json(const char* json, qheat_config** out);
/* Overlay JSON keys onto an existing configuration. */
QHEAT_API qheat_status qheat_config_apply_json(qheat_config* cfg, const char* json);
QHEAT_API qheat_status qheat_config_to_json(const qheat_config* cfg, char** out);
QHEAT_API qheat_status qheat_config_set_number(qheat_config* cfg, const char* key, double value);
/* String keys: merge, out, preset. */
QHEAT_API qheat_status qheat_config_set_string(qheat_config* cfg, const char* key,
                                               const char* value);
QHEAT_API qheat_status qheat_config_validate(const qheat_config* cfg);
/* Newline-separated non-fatal advisories (possibly empty). */
QHEAT_API qheat_status qheat_config_advisories(const qheat_config* cfg, char** out);
QHEAT_API void qheat_config_destroy(qheat_config* cfg);

/* Single point -------------------------------------------------------- */

QHEAT_API qheat_status qheat_spectrum_compute(const qheat_config* cfg, qheat_spectrum* out);
QHEAT_API qheat_status qheat_steady(const qheat_config* cfg, qheat_steady_report* out);
/* Runs the exact solve and the jump simulation (config jumps and seed). */
QHEAT_API qheat_status qheat_verify(const qheat_config* cfg, qheat_steady_report* exact,
                                    qheat_stochastic_report* stochastic);

/* Coefficients; channels are 'a', 'b', 'c'. passive_temperature may be NULL
 * (passive bath at t). merged is a two-character string such as "bc". */
QHEAT_API qheat_status qheat_rectification_3t(const qheat_config* cfg, char l, char l_prime,
                                              double t, double t_hot,
                                              const double* passive_temperature, double* out);
QHEAT_API qheat_status qheat_rectification_2t(const qheat_config* cfg, const char* merged,
                                              char single, double t, double t_hot, double* out);
QHEAT_API qheat_status qheat_circulation(const qheat_config* cfg, double t, double t_hot,
                                         double* out);

/* Sweeps -------------------------------------------------------------- */

/* workers == 0 uses every hardware thread. */
QHEAT_API qheat_status qheat_sweep_run(const qheat_config* cfg, unsigned workers,
                                       qheat_sweep** out);
QHEAT_API qheat_status qheat_sweep_get_summary(const qheat_sweep* sweep,
                                               qheat_sweep_summary* out);
QHEAT_API qheat_status qheat_sweep_warnings(const qheat_sweep* sweep, char** out);
QHEAT_API qheat_status qheat_sweep_to_csv(const qheat_sweep* sweep, char** out);
QHEAT_API qheat_status qheat_sweep_write_csv(const qheat_sweep* sweep, const char* path);
QHEAT_API void qheat_sweep_destroy(qheat_sweep* sweep);

#ifdef __cplusplus
}
#endif

#endif /* QHEAT_QHEAT_H */
