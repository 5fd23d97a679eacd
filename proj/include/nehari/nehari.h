#ifndef NEHARI_NEHARI_H
#define NEHARI_NEHARI_H

/*
 * C interface to the nehari library: matrix Hankel / Nehari–Takagi
 * computations, superoptimal approximation certificates and Toeplitz index
 * audits. All handles are opaque; every fallible call returns a status code
 * and leaves a message retrievable with nehari_last_error() (per thread).
 * Reports are JSON documents (schema 1) owned by the report handle.
 */

#include <stdint.h>

#if defined(_WIN32)
#define NEHARI_API __declspec(dllexport)
#else
#define NEHARI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct nehari_config nehari_config;
typedef struct nehari_symbol nehari_symbol;
typedef struct nehari_report nehari_report;

typedef enum nehari_status {
  NEHARI_OK = 0,
  NEHARI_INVALID_INPUT = 1,
  NEHARI_NOT_INVERTIBLE_ON_CIRCLE = 2,
  NEHARI_RESOLUTION_FAILURE = 3,
  NEHARI_NOT_K_ADMISSIBLE = 4,
  NEHARI_DEGENERATE_LEVEL = 5,
  NEHARI_NOT_A_BEST_APPROXIMANT = 6,
  NEHARI_CONSTRUCTION_FAILURE = 7,
  NEHARI_ILL_CONDITIONED = 8,
  NEHARI_INTERNAL_INCONSISTENCY = 9,
  NEHARI_INTERNAL_ERROR = 10
} nehari_status;

NEHARI_API const char* nehari_status_name(nehari_status status);
/* Message of the last failing call on this thread ("" if none). */
NEHARI_API const char* nehari_last_error(void);

/* Run configuration. Created with the defaults (grid 4096, or NEHARI_GRID). */
NEHARI_API nehari_status nehari_config_create(nehari_config** out);
NEHARI_API nehari_status nehari_config_set_grid_size(nehari_config* config, int grid_size);
NEHARI_API nehari_status nehari_config_set_seed(nehari_config* config, uint64_t seed);
/* Recorded in reports only; the library never writes files. */
NEHARI_API nehari_status nehari_config_set_output(nehari_config* config, const char* path);
NEHARI_API void nehari_config_destroy(nehari_config* config);

/* Symbols: JSON symbol files, JSON text or built-in data. */
NEHARI_API nehari_status nehari_symbol_from_file(const char* path, nehari_symbol** out);
NEHARI_API nehari_status nehari_symbol_from_json(const char* text, nehari_symbol** out);
/* name "nehari-takagi-2x2", part "phi", "q", "left-factor" or "diagonal-factor". */
NEHARI_API nehari_status nehari_symbol_example(const char* name, const char* part, nehari_symbol** out);
NEHARI_API int nehari_symbol_rows(const nehari_symbol* symbol);
NEHARI_API int nehari_symbol_cols(const nehari_symbol* symbol);
NEHARI_API void nehari_symbol_destroy(nehari_symbol* symbol);

/* Computations. On success *out receives a report the caller destroys. */
NEHARI_API nehari_status nehari_analyze(const nehari_config* config, const nehari_symbol* phi, nehari_report** out);
NEHARI_API nehari_status nehari_aak(const nehari_config* config, const nehari_symbol* phi, int k, nehari_report** out);
NEHARI_API nehari_status nehari_verify_superopt(const nehari_config* config, const nehari_symbol* phi,
                                                const nehari_symbol* q, int k, nehari_report** out);
NEHARI_API nehari_status nehari_superopt_2x2(const nehari_config* config, const nehari_symbol* phi, int k,
                                             nehari_report** out);
NEHARI_API nehari_status nehari_index_audit(const nehari_config* config, const nehari_symbol* phi,
                                            const nehari_symbol* q, int k, nehari_report** out);
NEHARI_API nehari_status nehari_very_bad_audit(const nehari_config* config, const nehari_symbol* psi,
                                               nehari_report** out);
NEHARI_API nehari_status nehari_example(const nehari_config* config, const char* name, nehari_report** out);
/* Uses the configuration's seed. */
NEHARI_API nehari_status nehari_scalar_suite(const nehari_config* config, int count, int max_degree,
                                             nehari_report** out);

NEHARI_API const char* nehari_report_json(const nehari_report* report);
/* Human-readable rendering when the command has one (scalar suite), else "". */
NEHARI_API const char* nehari_report_text(const nehari_report* report);
NEHARI_API void nehari_report_destroy(nehari_report* report);

#ifdef __cplusplus
}
#endif

#endif
