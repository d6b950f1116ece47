/* C interface to the exact graded-algebra calculator.
 *
 * Conventions:
 *   - every function returns an apx_status; APX_OK means success
 *   - on failure, apx_last_error() describes the problem for the calling
 *     thread; the pointer stays valid until that thread's next call
 *   - strings returned through char** out parameters are heap-allocated;
 *     release them with apx_string_free
 *   - all exact values cross this boundary as "p/q" strings, never as
 *     floating point
 */
#ifndef APXALG_H
#define APXALG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum apx_status {
    APX_OK = 0,
    APX_ERROR_USAGE = 1,      /* bad call parameters */
    APX_ERROR_VALIDATION = 2, /* scenario content fails its contract */
    APX_ERROR_ORACLE = 3,     /* reserved for oracle disagreement */
    APX_ERROR_INTERNAL = 4    /* broken invariant; always a bug */
} apx_status;

typedef enum apx_format {
    APX_FORMAT_TABLE = 0,
    APX_FORMAT_JSON = 1,
    APX_FORMAT_CSV = 2
} apx_format;

/* opaque handle to a validated scenario (divisor + marked b1 element) */
typedef struct apx_scenario apx_scenario;

const char* apx_version(void);

/* message of the calling thread's last failed call; do not free */
const char* apx_last_error(void);

void apx_string_free(char* text);

/* --- scenario lifecycle -------------------------------------------------- */

/* name is one of: chen, harmonic, finite:<d> */
apx_status apx_scenario_preset(const char* name, apx_scenario** out);
apx_status apx_scenario_from_text(const char* json_text, apx_scenario** out);
apx_status apx_scenario_from_file(const char* path, apx_scenario** out);
apx_status apx_scenario_name(const apx_scenario* s, char** out_text);
apx_status apx_scenario_to_text(const apx_scenario* s, char** out_text);
void apx_scenario_free(apx_scenario* s);

/* --- scalar queries ------------------------------------------------------ */

/* degree of the floor divisor at level n */
apx_status apx_floor_degree(const apx_scenario* s, uint64_t n, int64_t* out);
/* dimension of graded piece n (floor degree + 1) */
apx_status apx_dim_piece(const apx_scenario* s, uint64_t n, uint64_t* out);
/* dimension of the image of n-fold products of piece p inside piece n*p */
apx_status apx_image_dim(const apx_scenario* s, uint64_t p, uint64_t n, uint64_t* out);
/* exact ratio image_dim(p,n) / dim_piece(p*n), rendered "p/q" */
apx_status apx_approx_ratio(const apx_scenario* s, uint64_t p, uint64_t n, char** out_text);
/* size of the cumulative negative-valuation support at level n_max */
apx_status apx_support_count(const apx_scenario* s, uint64_t n_max, uint64_t* out);
/* 2p - J(p) for the geometric(1,1/2) divisor, plus whether it clears both
 * proved bounds (the floor bound and the analytic bound, checked exactly) */
apx_status apx_deficiency(uint64_t p, int64_t* out_deficiency, int* out_within_bounds);

/* --- rendered command documents ------------------------------------------ */

apx_status apx_cmd_seq(const apx_scenario* s, uint64_t n, apx_format format, char** out_text);
apx_status apx_cmd_dim(const apx_scenario* s, uint64_t n, apx_format format, char** out_text);
/* epsilon is an exact rational string in (0,1) */
apx_status apx_cmd_certify(const apx_scenario* s, const char* epsilon, const uint64_t* p_list,
                           size_t p_count, uint64_t n_max, unsigned threads, apx_format format,
                           char** out_text);
apx_status apx_cmd_support(const apx_scenario* s, uint64_t n_max, apx_format format,
                           char** out_text);
apx_status apx_cmd_volume(const apx_scenario* s, uint64_t n_max, unsigned threads,
                          apx_format format, char** out_text);
/* *out_mismatch is set to 1 when any oracle row disagrees with its closed
 * form (the call itself still succeeds and renders the full matrix) */
apx_status apx_cmd_oracle_check(const apx_scenario* s, uint64_t cap, apx_format format,
                                char** out_text, int* out_mismatch);
/* all commands with stock parameters, bundled as one JSON document */
apx_status apx_cmd_report(const apx_scenario* s, unsigned threads, char** out_text,
                          int* out_mismatch);

#ifdef __cplusplus
}
#endif

#endif /* APXALG_H */
