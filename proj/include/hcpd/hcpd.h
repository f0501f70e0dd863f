/* Copyright 2026 The hcpd Authors
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

/* C interface to the hcpd change point testing library.
 *
 * All entry points return hcpd_status; resources come back through opaque
 * handles that must be released with the matching *_free function. On any
 * failure hcpd_last_error() describes the problem for the calling thread.
 */

#ifndef HCPD_H
#define HCPD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HCPD_API __declspec(dllexport)
#else
#define HCPD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hcpd_status {
    HCPD_OK = 0,
    HCPD_ERR_INVALID_ARGUMENT = 1,
    HCPD_ERR_DEGENERATE_INPUT = 2,
    HCPD_ERR_NO_CONVERGENCE = 3,
    HCPD_ERR_IO = 4,
    HCPD_ERR_INTERNAL = 5
} hcpd_status;

typedef enum hcpd_method {
    HCPD_METHOD_SUCM = 0,
    HCPD_METHOD_SCCM = 1,
    HCPD_METHOD_HUCM = 2,
    HCPD_METHOD_HCCM = 3,
    HCPD_METHOD_SUAD = 4,
    HCPD_METHOD_SCAD = 5,
    HCPD_METHOD_HUAD = 6,
    HCPD_METHOD_HCAD = 7,
    HCPD_METHOD_VSU = 8,
    HCPD_METHOD_VSC = 9
} hcpd_method;

typedef enum hcpd_lag_window { HCPD_WINDOW_BARTLETT = 0, HCPD_WINDOW_PARZEN = 1 } hcpd_lag_window;

/* Zeros mean "derive the default from the sample length". */
typedef struct hcpd_config {
    int grid_size;          /* G; 0 -> min(N, 256)                       */
    int num_terms;          /* m; 0 -> 99.9% mass rule / 200 classical   */
    double bandwidth;       /* h; 0 -> floor(N^(1/3))                    */
    int lag_window;         /* hcpd_lag_window                           */
    long replications;      /* R; 0 -> 10000                             */
    uint64_t seed;
    int pvalue_correction;  /* nonzero: (1 + #)/(R + 1)                  */
} hcpd_config;

typedef struct hcpd_series hcpd_series;
typedef struct hcpd_report hcpd_report;
typedef struct hcpd_spectrum hcpd_spectrum;

HCPD_API const char* hcpd_version(void);

/* Message for the most recent failure on this thread; never NULL. */
HCPD_API const char* hcpd_last_error(void);

HCPD_API void hcpd_config_init(hcpd_config* cfg);

/* ---- series ---------------------------------------------------------- */

HCPD_API hcpd_status hcpd_series_create(const double* values, size_t length, hcpd_series** out);
HCPD_API void hcpd_series_free(hcpd_series* s);
HCPD_API size_t hcpd_series_length(const hcpd_series* s);
HCPD_API hcpd_status hcpd_series_copy_values(const hcpd_series* s, double* buffer, size_t length);

/* ---- change point tests ---------------------------------------------- */

HCPD_API const char* hcpd_method_name(hcpd_method method);
HCPD_API hcpd_status hcpd_method_parse(const char* name, hcpd_method* out);

HCPD_API hcpd_status hcpd_run_test(const hcpd_series* s, hcpd_method method,
                                   const hcpd_config* cfg, hcpd_report** out);
HCPD_API void hcpd_report_free(hcpd_report* r);
HCPD_API double hcpd_report_statistic(const hcpd_report* r);
HCPD_API double hcpd_report_p_value(const hcpd_report* r);
/* alpha must be one of 0.10, 0.05, 0.01. */
HCPD_API hcpd_status hcpd_report_critical_value(const hcpd_report* r, double alpha, double* out);
HCPD_API const char* hcpd_report_spectrum_source(const hcpd_report* r);
HCPD_API size_t hcpd_report_warning_count(const hcpd_report* r);
HCPD_API const char* hcpd_report_warning(const hcpd_report* r, size_t index);
/* Serialize as a single JSON object (schema v1). Free with hcpd_string_free. */
HCPD_API hcpd_status hcpd_report_to_json(const hcpd_report* r, char** out);
HCPD_API void hcpd_string_free(char* s);

/* ---- regression residuals -------------------------------------------- */

/* design is column-major with hcpd_series_length(x) rows. */
HCPD_API hcpd_status hcpd_ols_residuals(const hcpd_series* x, const double* design,
                                        size_t num_cols, hcpd_series** out);

typedef double (*hcpd_model_fn)(const double* covariate_row, size_t num_covariates,
                                const double* theta, size_t num_params, void* user);

/* covariates is column-major (may be NULL when num_covariates == 0). On
 * success theta_out (length num_params) holds the fitted parameters. */
HCPD_API hcpd_status hcpd_nls_residuals(const hcpd_series* x, const double* covariates,
                                        size_t num_covariates, hcpd_model_fn model, void* user,
                                        const double* theta0, size_t num_params,
                                        int max_iterations, double* theta_out, hcpd_series** out);

/* ---- limit spectra and critical values ------------------------------- */

typedef enum hcpd_functional { HCPD_FUNCTIONAL_CM = 0, HCPD_FUNCTIONAL_AD = 1 } hcpd_functional;

HCPD_API hcpd_status hcpd_spectrum_classical(hcpd_functional f, int num_terms,
                                             hcpd_spectrum** out);
HCPD_API hcpd_status hcpd_spectrum_vs(int num_terms, hcpd_spectrum** out);
/* Eigenvalue weights of the empirical covariance kernel of a sample. */
HCPD_API hcpd_status hcpd_spectrum_empirical(const hcpd_series* s, int correlated,
                                             int ad_weighted, const hcpd_config* cfg,
                                             hcpd_spectrum** out);
HCPD_API void hcpd_spectrum_free(hcpd_spectrum* sp);
HCPD_API size_t hcpd_spectrum_size(const hcpd_spectrum* sp);
HCPD_API hcpd_status hcpd_spectrum_weight(const hcpd_spectrum* sp, size_t index, double* out);
HCPD_API hcpd_status hcpd_spectrum_critical_value(const hcpd_spectrum* sp, double alpha,
                                                  long replications, uint64_t seed, double* out);
HCPD_API hcpd_status hcpd_spectrum_p_value(const hcpd_spectrum* sp, double observed,
                                           long replications, uint64_t seed, double* out);

/* Debug dump of the empirical kernel matrix: header line with G, then G
 * comma-separated rows. */
HCPD_API hcpd_status hcpd_kernel_write_csv(const hcpd_series* s, int correlated, int ad_weighted,
                                           const hcpd_config* cfg, const char* path);

/* ---- simulation harness ---------------------------------------------- */

typedef enum hcpd_dgp_base {
    HCPD_DGP_GAUSSIAN = 0,
    HCPD_DGP_AR1 = 1,
    HCPD_DGP_GARCH = 2,
    HCPD_DGP_GARCH_ABS = 3,
    HCPD_DGP_GARCH_SQ = 4
} hcpd_dgp_base;

typedef enum hcpd_scale_profile {
    HCPD_PROFILE_NONE = 0,
    HCPD_PROFILE_A1 = 1,
    HCPD_PROFILE_A2 = 2,
    HCPD_PROFILE_A3 = 3,
    HCPD_PROFILE_A4 = 4,
    HCPD_PROFILE_SIN = 5
} hcpd_scale_profile;

typedef struct hcpd_dgp_spec {
    int base;            /* hcpd_dgp_base                                */
    double rho;          /* AR(1) coefficient                            */
    double omega;        /* GARCH(1,1) parameters                        */
    double alpha;
    double beta;
    int profile;         /* hcpd_scale_profile                           */
    int mean_shift;      /* nonzero: one level shift in the mean         */
    double mean_theta;   /* change fraction in (0, 1)                    */
    double mean_before;
    double mean_after;
    size_t length;
} hcpd_dgp_spec;

HCPD_API void hcpd_dgp_spec_init(hcpd_dgp_spec* spec);
HCPD_API hcpd_status hcpd_dgp_generate(const hcpd_dgp_spec* spec, uint64_t seed,
                                       hcpd_series** out);
HCPD_API hcpd_status hcpd_rejection_rate(const hcpd_dgp_spec* spec, hcpd_method method,
                                         const hcpd_config* cfg, double level, long replications,
                                         uint64_t seed, double* rate, double* mc_stderr,
                                         long* degenerate);

/* Deterministic child seed for stream index; splitmix64 based. */
HCPD_API uint64_t hcpd_mix_seed(uint64_t seed, uint64_t index);

#ifdef __cplusplus
}
#endif

#endif /* HCPD_H */
