/* C interface to the gcd-sum workbench.
 *
 * Everything is reached through opaque handles and status codes. A context
 * carries the last error message; tables hold sieved values of arithmetic
 * functions; a run config drives the batch commands the CLI exposes.
 *
 * All floating-point crossings use double. The core computes in extended
 * precision and rounds at this boundary; string variants of the exact-backend
 * entry points return lossless "p/q" rationals instead.
 */

#ifndef GCDSUM_H
#define GCDSUM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gcdsum_status {
    GCDSUM_OK = 0,
    GCDSUM_ERR_ARGUMENT = 1, /* null handle, null out-pointer, short buffer */
    GCDSUM_ERR_DOMAIN = 2,   /* argument outside a function's domain */
    GCDSUM_ERR_RANGE = 3,    /* index or argument outside a table's range */
    GCDSUM_ERR_BACKEND = 4,  /* exact value requested from a real-backed table */
    GCDSUM_ERR_BUDGET = 5,   /* configured work budget exceeded */
    GCDSUM_ERR_CONFIG = 6,   /* bad selector, key, or config file */
    GCDSUM_ERR_INTERNAL = 7  /* allocation failure or unexpected exception */
} gcdsum_status;

typedef struct gcdsum_ctx gcdsum_ctx;
typedef struct gcdsum_table gcdsum_table;
typedef struct gcdsum_run_config gcdsum_run_config;

/* ------------------------------------------------------------------ context */

gcdsum_ctx* gcdsum_ctx_new(void);
void gcdsum_ctx_free(gcdsum_ctx* ctx);

/* Message of the last failing call on this context; empty string if none.
 * Valid until the next failing call on the same context. */
const char* gcdsum_last_error(const gcdsum_ctx* ctx);

/* ----------------------------------------------------------- special values */

/* zeta(sigma) for sigma > -1, sigma != 1; derivative needs sigma > 1. */
gcdsum_status gcdsum_zeta(gcdsum_ctx* ctx, double sigma, double* out);
gcdsum_status gcdsum_zeta_prime(gcdsum_ctx* ctx, double sigma, double* out);

/* Same with an explicit Euler-Maclaurin split: direct sum to `cut`, then
 * `terms` correction terms. */
gcdsum_status gcdsum_zeta_configured(gcdsum_ctx* ctx, double sigma, uint32_t cut,
                                     uint32_t terms, double* out);

/* Exact Bernoulli number B_{2m} rendered as "p/q". */
gcdsum_status gcdsum_bernoulli_even_str(gcdsum_ctx* ctx, uint32_t m, char* buf, size_t cap);

gcdsum_status gcdsum_euler_gamma(gcdsum_ctx* ctx, double* out);

/* exp(-c (log x)^{3/5} (log log x)^{-1/5}); requires x > e, c > 0. */
gcdsum_status gcdsum_delta_decay(gcdsum_ctx* ctx, double x, double c, double* out);

/* ------------------------------------------------------------------- tables */

/* Sieves f(1..limit). Selectors: mu, abs_mu, one, id, tau, phi, psi, and the
 * parameterized id_a(a), sigma_a(a), phi_alpha(alpha), psi_beta(beta),
 * xi_q(q). Integer exponents give an exact-rational table, fractional ones an
 * extended-precision real table. */
gcdsum_status gcdsum_table_sieve(gcdsum_ctx* ctx, const char* spec, uint64_t limit,
                                 gcdsum_table** out);

/* Dirichlet convolution of two tables over a common limit. */
gcdsum_status gcdsum_table_convolve(gcdsum_ctx* ctx, const gcdsum_table* f,
                                    const gcdsum_table* g, gcdsum_table** out);

void gcdsum_table_free(gcdsum_table* t);

uint64_t gcdsum_table_limit(const gcdsum_table* t);
int gcdsum_table_is_exact(const gcdsum_table* t);
const char* gcdsum_table_label(const gcdsum_table* t);

gcdsum_status gcdsum_table_value(gcdsum_ctx* ctx, const gcdsum_table* t, uint64_t n,
                                 double* out);

/* "p/q" for exact tables, 17-significant-digit decimal for real ones. */
gcdsum_status gcdsum_table_value_str(gcdsum_ctx* ctx, const gcdsum_table* t, uint64_t n,
                                     char* buf, size_t cap);

/* sum_{n <= x} f(n) for 1 <= x <= limit. */
gcdsum_status gcdsum_partial_sum(gcdsum_ctx* ctx, const gcdsum_table* t, double x,
                                 double* out);

/* sum_{n <= x} sigma_a(n) for -1 < a < 0 by the divisor hyperbola. */
gcdsum_status gcdsum_summatory_sigma_a(gcdsum_ctx* ctx, double x, double a, double* out);

/* ----------------------------------------------------------- weighted sums */

/* P_f(k) = sum_{j <= k} j^r f(gcd(j,k)). `direct_route` nonzero evaluates the
 * literal gcd loop, zero the divisor-sum rearrangement; both agree. */
gcdsum_status gcdsum_pillai(gcdsum_ctx* ctx, const gcdsum_table* f, uint64_t k,
                            uint32_t r, int direct_route, double* out);

/* M_r(x;f) = sum_{k <= x} k^{-(r+1)} P_f(k) and its closed identity value.
 * Requires table limit >= floor(x). */
gcdsum_status gcdsum_m_r(gcdsum_ctx* ctx, const gcdsum_table* f, double x, uint32_t r,
                         double* out);
gcdsum_status gcdsum_m_r_str(gcdsum_ctx* ctx, const gcdsum_table* f, double x, uint32_t r,
                             char* buf, size_t cap);
gcdsum_status gcdsum_m_r_rhs(gcdsum_ctx* ctx, const gcdsum_table* f, double x, uint32_t r,
                             double* out);
gcdsum_status gcdsum_m_r_rhs_str(gcdsum_ctx* ctx, const gcdsum_table* f, double x,
                                 uint32_t r, char* buf, size_t cap);

/* s-power variants (s >= 2). The literal evaluation walks sum_{k<=x} k^s inner
 * terms and refuses when that exceeds `budget`. */
gcdsum_status gcdsum_m_rs(gcdsum_ctx* ctx, const gcdsum_table* f, double x, uint32_t r,
                          uint32_t s, uint64_t budget, double* out);
gcdsum_status gcdsum_m_rs_str(gcdsum_ctx* ctx, const gcdsum_table* f, double x, uint32_t r,
                              uint32_t s, uint64_t budget, char* buf, size_t cap);
gcdsum_status gcdsum_m_rs_rhs(gcdsum_ctx* ctx, const gcdsum_table* f, double x, uint32_t r,
                              uint32_t s, double* out);
gcdsum_status gcdsum_m_rs_rhs_str(gcdsum_ctx* ctx, const gcdsum_table* f, double x,
                                  uint32_t r, uint32_t s, char* buf, size_t cap);

/* (j, k^s)_s: the largest d with d | k and d^s | j; j = 0 gives k. */
gcdsum_status gcdsum_generalized_gcd(gcdsum_ctx* ctx, uint64_t j, uint64_t k, uint32_t s,
                                     uint64_t* out);

/* c_k(j), its s-power generalization, and the two-function divisor sum
 * s_k^{(s)}(j) = sum_{d | k, d^s | j} f(d) g(k/d). */
gcdsum_status gcdsum_ramanujan_sum(gcdsum_ctx* ctx, uint64_t k, uint64_t j, int64_t* out);
gcdsum_status gcdsum_cohen_sum(gcdsum_ctx* ctx, uint64_t k, uint64_t j, uint32_t s,
                               int64_t* out);
gcdsum_status gcdsum_anderson_apostol(gcdsum_ctx* ctx, const gcdsum_table* f,
                                      const gcdsum_table* g, uint64_t k, uint64_t j,
                                      uint32_t s, double* out);

/* -------------------------------------------------------------- asymptotics */

/* Model selectors: K-id, K-phi, gcd331, Th1, Th2-phi, Th2-psi, Th5, Th6, Th7,
 * Cor-phi_s, Cor-psi_s, Cor-tau, Cor-phi_s+a, Cor-psi_s+a, Cor-tau_s+a.
 * `a` is passed by pointer and may be NULL where the model does not take it;
 * `h` selects the weight (mu, abs_mu, tau, xi_q) for the h-parameterized
 * models and is ignored elsewhere (NULL means mu). */

typedef struct gcdsum_error_sample {
    double x;
    double exact;     /* the finite weighted average itself */
    double main_term; /* closed main term */
    double k;         /* exact - main_term */
    double k_formula; /* displayed remainder formula */
    double residual;  /* k - k_formula */
} gcdsum_error_sample;

gcdsum_status gcdsum_error_term(gcdsum_ctx* ctx, const char* theorem, uint32_t r,
                                uint32_t s, const double* a, const char* h, uint32_t q,
                                double x, gcdsum_error_sample* out);

/* Closed main term evaluated at x, and its raw coefficients. Coefficients
 * that a model does not use come back 0; *exponent reports the power 1+a the
 * third coefficient multiplies. */
gcdsum_status gcdsum_main_term(gcdsum_ctx* ctx, const char* theorem, uint32_t r,
                               uint32_t s, const double* a, const char* h, uint32_t q,
                               double x, double* out);
gcdsum_status gcdsum_main_term_coeffs(gcdsum_ctx* ctx, const char* theorem, uint32_t r,
                                      uint32_t s, const double* a, const char* h,
                                      uint32_t q, double* c_xlogx, double* c_x,
                                      double* c_x1pa, double* exponent);

/* Divisor-problem remainders and the sawtooth building blocks. */
gcdsum_status gcdsum_delta_divisor(gcdsum_ctx* ctx, double x, double* out);
gcdsum_status gcdsum_delta_a(gcdsum_ctx* ctx, double x, double a, double* out);

/* Truncated oscillating expansion of delta_a with N cosine terms.
 * *truncation_ok (optional) reports N <= x, the regime its error bound
 * covers. */
gcdsum_status gcdsum_voronoi_delta_a(gcdsum_ctx* ctx, double x, double a, uint64_t N,
                                     int* truncation_ok, double* out);

gcdsum_status gcdsum_vartheta(gcdsum_ctx* ctx, double x, double* out);

/* D_s(x) and its |mu| twin (nonzero `tilde`), for s >= 2. */
gcdsum_status gcdsum_d_series(gcdsum_ctx* ctx, double x, uint32_t s, int tilde,
                              double* out);

/* H_h(sigma) = sum_n h(n) n^{-sigma} in closed form (sigma > 1), and its
 * derivative when `derivative` is nonzero. */
gcdsum_status gcdsum_h_series(gcdsum_ctx* ctx, const char* h, double sigma, uint32_t q,
                              int derivative, double* out);

/* Partial-sum lemma checks. Selectors: lem2-sigma1, lem2-la, lem2-mu,
 * lem2-psi, lem2-l2m, lem2-psi2m. */
typedef struct gcdsum_lemma_check {
    double exact;
    double predicted_main;
    double residual;
} gcdsum_lemma_check;

gcdsum_status gcdsum_lemma_sum_check(gcdsum_ctx* ctx, const char* lemma, double x,
                                     double a, uint32_t m, gcdsum_lemma_check* out);

/* -------------------------------------------------------------- mean square */

/* Leading mean-square constants as truncated series. Selectors: C2, C3, C4,
 * D1, D2, Kmean. `a` as in the asymptotics section; `tail` (optional)
 * receives a bound on the dropped tail. */
gcdsum_status gcdsum_series_constant(gcdsum_ctx* ctx, const char* kind, const double* a,
                                     uint64_t N, double* value, double* tail);

/* Integral over [lower, T] of the squared remainder of a mean-square law.
 * Selectors: Th3, Th4-phi, Th4-psi, Lrx, Urx, delta-a. */
gcdsum_status gcdsum_integrate_k_squared(gcdsum_ctx* ctx, const char* kind, uint32_t r,
                                         uint32_t s, const double* a, const char* h,
                                         uint32_t q, double T, double* out);

/* ------------------------------------------------------------------- runner */

gcdsum_run_config* gcdsum_run_config_new(void);
void gcdsum_run_config_free(gcdsum_run_config* cfg);

/* Keys: command, r, s, a, f, theorem, kind, h, q, x_max, T_list, table_limit,
 * series_N, output, seed, samples, budget. */
gcdsum_status gcdsum_run_config_set(gcdsum_ctx* ctx, gcdsum_run_config* cfg,
                                    const char* key, const char* value);

/* Loads key=value lines ('#' comments) over the current values. */
gcdsum_status gcdsum_run_config_load_file(gcdsum_ctx* ctx, gcdsum_run_config* cfg,
                                          const char* path);

/* Executes the configured command. *exit_code receives 0 (success), 1 (bad
 * configuration or resource limit), or 2 (hard invariant violation); the
 * status only reports plumbing failures. */
gcdsum_status gcdsum_run(gcdsum_ctx* ctx, const gcdsum_run_config* cfg, int* exit_code);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GCDSUM_H */
