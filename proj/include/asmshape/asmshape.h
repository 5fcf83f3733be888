/* C interface to the asmshape library.
 *
 * All functions return a status code; additional detail for the last failure
 * on the calling thread is available via asmshape_last_error(). Strings
 * returned through char** out-parameters are heap-allocated and must be
 * released with asmshape_string_free(). Exact rationals cross the boundary
 * as "p" or "p/q" decimal strings.
 */
#ifndef ASMSHAPE_H
#define ASMSHAPE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  ASMSHAPE_OK = 0,
  ASMSHAPE_ERR_INTERNAL = 1,
  ASMSHAPE_ERR_INVALID = 2,  /* bad argument or refused bound */
  ASMSHAPE_ERR_MISMATCH = 3, /* verification mismatch (method=both) */
};

const char* asmshape_version(void);

/* Message of the most recent failure on this thread ("" if none). */
const char* asmshape_last_error(void);

void asmshape_string_free(char* s);

/* Raised enumeration bound (default 8); applies to the enumeration-backed
 * entry points below. */
int asmshape_set_max_n(int max_n);

/* --- exact combinatorial layer ------------------------------------------ */

/* Sum over ASMs of q^(number of -1 entries). */
int asmshape_weighted_count(int n, const char* q, char** out);

/* JSON array of n rational strings, H_N^(r) for r = 1..n (from the right). */
int asmshape_boundary_correlation(int n, const char* q, char** out_json);

/* JSON list of all ASMs of size n as arrays of arrays. */
int asmshape_enumerate_json(int n, char** out_json);

/* --- generating functions ------------------------------------------------ */

/* case_tag is "q1", "q2" or "q3".
 * Output: {"n":N,"case":tag,"coeffs":["a/b",...]} (degree order). */
int asmshape_h_poly(int n, const char* case_tag, char** out_json);

/* --- emptiness formation probability ------------------------------------- */

/* method: "oracle", "residue" or "both". With "both" the record carries both
 * values and a match flag, and a mismatch returns ASMSHAPE_ERR_MISMATCH.
 * Output: {"n":..,"r":..,"s":..,"q":"..","efp":"p/q","oracle":"p/q","match":true} */
int asmshape_efp(int n, int r, int s, const char* q, const char* method,
                 char** out_json);

/* The companion contour identity; returns its exact value as a string
 * (must be "1"). */
int asmshape_unit_integral(int n, int r, int s, const char* case_tag, char** out);

/* Residue-method profile in r at fixed s: JSON array of rational strings. */
int asmshape_efp_profile(int n, int s, const char* case_tag, char** out_json);

/* --- arctic curves ------------------------------------------------------- */

int asmshape_arctic_point(const char* case_tag, double omega, double* x, double* y);
int asmshape_arctic_solve(const char* case_tag, double omega, double* x, double* y);
int asmshape_arctic_residual(const char* case_tag, double x, double y, double* out);
/* Caller-allocated arrays of length m; omega[m-1] is +infinity. */
int asmshape_arctic_sample(const char* case_tag, int m, double* omega, double* xs,
                           double* ys, double* residual);
int asmshape_temperate_area(const char* case_tag, double* area);

/* --- Monte Carlo sampler ------------------------------------------------- */

typedef struct asmshape_sampler asmshape_sampler;

int asmshape_sampler_new(int n, const char* q, uint64_t seed,
                         asmshape_sampler** out);
void asmshape_sampler_free(asmshape_sampler* s);

/* Runs burn-in then accumulates n_samples snapshots spaced between sweeps
 * apart into the density field (additive across calls). */
int asmshape_sampler_run(asmshape_sampler* s, long burnin_sweeps,
                         long between_sweeps, long n_samples);

/* Copies the n*n per-cell means; any pointer may be NULL. */
int asmshape_sampler_density(const asmshape_sampler* s, double* c_mean,
                             double* plus_mean, double* minus_mean);

/* Threshold crossing of the -1 density per top-quarter row. Writes at most
 * cap points; *count is the number found, *skipped counts non-crossing rows. */
int asmshape_sampler_boundary(const asmshape_sampler* s, double threshold,
                              double* xs, double* ys, int cap, int* count,
                              int* skipped);

/* Monte Carlo EFP estimates on a fresh chain with the sampler's (n, q, seed).
 * profile must hold n doubles (index r-1). */
int asmshape_sampler_efp_profile(const asmshape_sampler* s, int scan_s,
                                 long burnin_sweeps, long between_sweeps,
                                 long n_samples, double* profile);

/* Exact-law chi-square test at small n (enumeration-backed). */
int asmshape_frequency_test(int n, const char* q, uint64_t seed, long sweeps,
                            long sample_every, double* chi2, double* p_value,
                            int* dof);

#ifdef __cplusplus
}
#endif

#endif
