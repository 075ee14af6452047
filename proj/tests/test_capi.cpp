// Exercises the shared-library boundary: every family of entry points, the
// status-code mapping, the last-error channel, and the string buffers.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "gcdsum/gcdsum.h"

static int failures = 0;

#define CHECK(cond)                                                        \
    do {                                                                   \
        if (!(cond)) {                                                     \
            std::fprintf(stderr, "FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                    \
        }                                                                  \
    } while (0)

static bool close_abs(double a, double b, double tol) { return std::fabs(a - b) < tol; }

static bool close_rel(double a, double b, double tol) {
    double scale = std::fmax(1.0, std::fmax(std::fabs(a), std::fabs(b)));
    return std::fabs(a - b) <= tol * scale;
}

static std::string slurp(const char* path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

static void special_values(gcdsum_ctx* ctx) {
    double v = 0.0;
    CHECK(gcdsum_zeta(ctx, 2.0, &v) == GCDSUM_OK);
    CHECK(close_abs(v, 1.6449340668482264, 1e-14));
    CHECK(gcdsum_zeta(ctx, 1.0, &v) == GCDSUM_ERR_DOMAIN);
    CHECK(std::strlen(gcdsum_last_error(ctx)) > 0);
    CHECK(gcdsum_zeta(ctx, 2.0, nullptr) == GCDSUM_ERR_ARGUMENT);
    CHECK(gcdsum_zeta(nullptr, 2.0, &v) == GCDSUM_ERR_ARGUMENT);

    CHECK(gcdsum_zeta_prime(ctx, 2.0, &v) == GCDSUM_OK);
    CHECK(close_abs(v, -0.93754825431584376, 1e-12));
    CHECK(gcdsum_zeta_configured(ctx, 2.0, 80, 12, &v) == GCDSUM_OK);
    CHECK(close_abs(v, 1.6449340668482264, 1e-12));

    char buf[64];
    CHECK(gcdsum_bernoulli_even_str(ctx, 0, buf, sizeof buf) == GCDSUM_OK);
    CHECK(std::strcmp(buf, "1") == 0);
    CHECK(gcdsum_bernoulli_even_str(ctx, 1, buf, sizeof buf) == GCDSUM_OK);
    CHECK(std::strcmp(buf, "1/6") == 0);
    CHECK(gcdsum_bernoulli_even_str(ctx, 2, buf, sizeof buf) == GCDSUM_OK);
    CHECK(std::strcmp(buf, "-1/30") == 0);
    CHECK(gcdsum_bernoulli_even_str(ctx, 2, buf, 3) == GCDSUM_ERR_ARGUMENT);
    CHECK(std::strstr(gcdsum_last_error(ctx), "too small") != nullptr);
    CHECK(gcdsum_bernoulli_even_str(ctx, 2, nullptr, 8) == GCDSUM_ERR_ARGUMENT);

    CHECK(gcdsum_euler_gamma(ctx, &v) == GCDSUM_OK);
    CHECK(close_abs(v, 0.57721566490153286, 1e-14));

    CHECK(gcdsum_delta_decay(ctx, 100.0, 1.0, &v) == GCDSUM_OK);
    CHECK(v > 0.0 && v < 1.0);
    CHECK(gcdsum_delta_decay(ctx, 2.0, 1.0, &v) == GCDSUM_ERR_DOMAIN);
}

static void tables(gcdsum_ctx* ctx) {
    gcdsum_table* phi = nullptr;
    CHECK(gcdsum_table_sieve(ctx, "phi", 60, &phi) == GCDSUM_OK);
    CHECK(phi != nullptr);
    CHECK(gcdsum_table_limit(phi) == 60);
    CHECK(gcdsum_table_is_exact(phi) == 1);
    CHECK(std::strcmp(gcdsum_table_label(phi), "phi") == 0);

    double v = 0.0;
    CHECK(gcdsum_table_value(ctx, phi, 6, &v) == GCDSUM_OK);
    CHECK(v == 2.0);
    char buf[64];
    CHECK(gcdsum_table_value_str(ctx, phi, 6, buf, sizeof buf) == GCDSUM_OK);
    CHECK(std::strcmp(buf, "2") == 0);
    CHECK(gcdsum_table_value(ctx, phi, 0, &v) == GCDSUM_ERR_RANGE);
    CHECK(gcdsum_table_value(ctx, phi, 61, &v) == GCDSUM_ERR_RANGE);

    // phi * one = id, via the exported convolution
    gcdsum_table* one = nullptr;
    CHECK(gcdsum_table_sieve(ctx, "one", 60, &one) == GCDSUM_OK);
    gcdsum_table* conv = nullptr;
    CHECK(gcdsum_table_convolve(ctx, phi, one, &conv) == GCDSUM_OK);
    CHECK(gcdsum_table_is_exact(conv) == 1);
    for (uint64_t n : {1ull, 12ull, 59ull}) {
        CHECK(gcdsum_table_value(ctx, conv, n, &v) == GCDSUM_OK);
        CHECK(v == (double)n);
    }
    gcdsum_table_free(conv);

    // mismatched limits convolve over the shorter table
    gcdsum_table* small = nullptr;
    CHECK(gcdsum_table_sieve(ctx, "one", 10, &small) == GCDSUM_OK);
    conv = nullptr;
    CHECK(gcdsum_table_convolve(ctx, phi, small, &conv) == GCDSUM_OK);
    CHECK(gcdsum_table_limit(conv) == 10);
    CHECK(gcdsum_table_value(ctx, conv, 10, &v) == GCDSUM_OK);
    CHECK(v == 10.0);
    gcdsum_table_free(conv);
    gcdsum_table_free(small);

    // real-backed table from a fractional exponent
    gcdsum_table* ida = nullptr;
    CHECK(gcdsum_table_sieve(ctx, "id_a(-0.5)", 10, &ida) == GCDSUM_OK);
    CHECK(gcdsum_table_is_exact(ida) == 0);
    CHECK(gcdsum_table_value(ctx, ida, 4, &v) == GCDSUM_OK);
    CHECK(close_abs(v, 0.5, 1e-15));
    CHECK(gcdsum_table_value_str(ctx, ida, 2, buf, sizeof buf) == GCDSUM_OK);
    CHECK(std::strchr(buf, '.') != nullptr);

    // partial sums respect the floor-then-range rule
    CHECK(gcdsum_partial_sum(ctx, one, 10.75, &v) == GCDSUM_OK);
    CHECK(v == 10.0);
    CHECK(gcdsum_partial_sum(ctx, one, 60.99, &v) == GCDSUM_OK);
    CHECK(v == 60.0);
    CHECK(gcdsum_partial_sum(ctx, one, 0.5, &v) == GCDSUM_ERR_DOMAIN);
    CHECK(gcdsum_partial_sum(ctx, one, 61.0, &v) == GCDSUM_ERR_RANGE);

    // hyperbola summatory against the sieved partial sum
    gcdsum_table* sig = nullptr;
    CHECK(gcdsum_table_sieve(ctx, "sigma_a(a=-0.5)", 100, &sig) == GCDSUM_OK);
    double direct = 0.0;
    CHECK(gcdsum_partial_sum(ctx, sig, 100.0, &direct) == GCDSUM_OK);
    CHECK(gcdsum_summatory_sigma_a(ctx, 100.0, -0.5, &v) == GCDSUM_OK);
    CHECK(close_rel(v, direct, 1e-9));
    CHECK(gcdsum_summatory_sigma_a(ctx, 100.0, 0.0, &v) == GCDSUM_ERR_DOMAIN);
    gcdsum_table_free(sig);

    CHECK(gcdsum_table_sieve(ctx, "nu", 10, &conv) == GCDSUM_ERR_DOMAIN);
    CHECK(gcdsum_table_sieve(ctx, "phi", 0, &conv) == GCDSUM_ERR_DOMAIN);
    CHECK(gcdsum_table_sieve(ctx, nullptr, 10, &conv) == GCDSUM_ERR_ARGUMENT);
    CHECK(gcdsum_table_value(ctx, nullptr, 1, &v) == GCDSUM_ERR_ARGUMENT);

    gcdsum_table_free(ida);
    gcdsum_table_free(one);
    gcdsum_table_free(phi);
}

static void weighted_sums(gcdsum_ctx* ctx) {
    gcdsum_table* id = nullptr;
    CHECK(gcdsum_table_sieve(ctx, "id", 50, &id) == GCDSUM_OK);

    // P_1(4; id) = 1*1 + 2*2 + 3*1 + 4*4 = 24, by both routes
    double direct = 0.0, rearranged = 0.0;
    CHECK(gcdsum_pillai(ctx, id, 4, 1, 1, &direct) == GCDSUM_OK);
    CHECK(gcdsum_pillai(ctx, id, 4, 1, 0, &rearranged) == GCDSUM_OK);
    CHECK(direct == 24.0);
    CHECK(rearranged == 24.0);

    double lhs = 0.0, rhs = 0.0;
    CHECK(gcdsum_m_r(ctx, id, 10.5, 1, &lhs) == GCDSUM_OK);
    CHECK(gcdsum_m_r_rhs(ctx, id, 10.5, 1, &rhs) == GCDSUM_OK);
    CHECK(close_rel(lhs, rhs, 1e-12));

    // exact backends agree as rendered rationals, not just as doubles
    char s1[128], s2[128];
    CHECK(gcdsum_m_r_str(ctx, id, 10.5, 1, s1, sizeof s1) == GCDSUM_OK);
    CHECK(gcdsum_m_r_rhs_str(ctx, id, 10.5, 1, s2, sizeof s2) == GCDSUM_OK);
    CHECK(std::strcmp(s1, s2) == 0);
    CHECK(std::strchr(s1, '/') != nullptr);
    CHECK(gcdsum_m_r_str(ctx, id, 10.5, 1, s1, 2) == GCDSUM_ERR_ARGUMENT);
    CHECK(gcdsum_m_r(ctx, id, 300.0, 1, &lhs) == GCDSUM_ERR_RANGE);
    CHECK(gcdsum_m_r(ctx, id, 0.5, 1, &lhs) == GCDSUM_ERR_DOMAIN);
    // the closed rearrangement leans on Faulhaber normalization, r >= 1 only
    CHECK(gcdsum_m_r(ctx, id, 10.5, 0, &lhs) == GCDSUM_ERR_DOMAIN);
    CHECK(gcdsum_m_r_rhs(ctx, id, 10.5, 0, &rhs) == GCDSUM_ERR_DOMAIN);

    gcdsum_table* tau = nullptr;
    CHECK(gcdsum_table_sieve(ctx, "tau", 12, &tau) == GCDSUM_OK);
    CHECK(gcdsum_m_rs(ctx, tau, 7.5, 1, 2, 100000000ull, &lhs) == GCDSUM_OK);
    CHECK(gcdsum_m_rs_rhs(ctx, tau, 7.5, 1, 2, &rhs) == GCDSUM_OK);
    CHECK(close_rel(lhs, rhs, 1e-12));
    CHECK(gcdsum_m_rs_str(ctx, tau, 7.5, 1, 2, 100000000ull, s1, sizeof s1) == GCDSUM_OK);
    CHECK(gcdsum_m_rs_rhs_str(ctx, tau, 7.5, 1, 2, s2, sizeof s2) == GCDSUM_OK);
    CHECK(std::strcmp(s1, s2) == 0);
    CHECK(gcdsum_m_rs(ctx, tau, 7.5, 1, 2, 10, &lhs) == GCDSUM_ERR_BUDGET);
    CHECK(std::strlen(gcdsum_last_error(ctx)) > 0);

    uint64_t g = 0;
    CHECK(gcdsum_generalized_gcd(ctx, 0, 5, 2, &g) == GCDSUM_OK);
    CHECK(g == 5);
    CHECK(gcdsum_generalized_gcd(ctx, 8, 4, 2, &g) == GCDSUM_OK);
    CHECK(g == 2);
    CHECK(gcdsum_generalized_gcd(ctx, 8, 0, 2, &g) == GCDSUM_ERR_DOMAIN);

    int64_t c = 0;
    CHECK(gcdsum_ramanujan_sum(ctx, 6, 1, &c) == GCDSUM_OK);
    CHECK(c == 1);
    CHECK(gcdsum_ramanujan_sum(ctx, 4, 2, &c) == GCDSUM_OK);
    CHECK(c == -2);
    CHECK(gcdsum_cohen_sum(ctx, 4, 4, 2, &c) == GCDSUM_OK);
    CHECK(c == -4);
    int64_t c1 = 0;
    CHECK(gcdsum_cohen_sum(ctx, 12, 8, 1, &c1) == GCDSUM_OK);
    CHECK(gcdsum_ramanujan_sum(ctx, 12, 8, &c) == GCDSUM_OK);
    CHECK(c1 == c);

    gcdsum_table* one = nullptr;
    CHECK(gcdsum_table_sieve(ctx, "one", 12, &one) == GCDSUM_OK);
    double aa = 0.0;
    CHECK(gcdsum_anderson_apostol(ctx, one, one, 4, 4, 2, &aa) == GCDSUM_OK);
    CHECK(aa == 2.0);

    gcdsum_table_free(one);
    gcdsum_table_free(tau);
    gcdsum_table_free(id);
}

static void asymptotics(gcdsum_ctx* ctx) {
    const double a_half = -0.5;

    gcdsum_error_sample e;
    CHECK(gcdsum_error_term(ctx, "Th1", 1, 1, &a_half, nullptr, 2, 50.5, &e) == GCDSUM_OK);
    CHECK(e.x == 50.5);
    CHECK(close_abs(e.k, e.exact - e.main_term, 1e-9));
    CHECK(close_abs(e.residual, std::fabs(e.k - e.k_formula), 1e-9));

    double m = 0.0;
    CHECK(gcdsum_main_term(ctx, "Th1", 1, 1, &a_half, nullptr, 2, 50.5, &m) == GCDSUM_OK);
    CHECK(close_abs(m, e.main_term, 1e-12));

    double cxl = 0.0, cx = 0.0, cxa = 0.0, expo = 0.0;
    CHECK(gcdsum_main_term_coeffs(ctx, "K-id", 1, 1, nullptr, nullptr, 2, &cxl, &cx, &cxa,
                                  &expo) == GCDSUM_OK);
    CHECK(close_abs(cxl, 0.30396355092701332, 1e-12));
    CHECK(cxa == 0.0);
    CHECK(gcdsum_main_term_coeffs(ctx, "Th1", 1, 1, &a_half, nullptr, 2, &cxl, &cx, &cxa,
                                  &expo) == GCDSUM_OK);
    CHECK(expo == 0.5);
    CHECK(cxa != 0.0);
    // unused out-pointers may be null
    CHECK(gcdsum_main_term_coeffs(ctx, "Th1", 1, 1, &a_half, nullptr, 2, nullptr, nullptr,
                                  nullptr, nullptr) == GCDSUM_OK);

    CHECK(gcdsum_error_term(ctx, "Th1", 1, 1, nullptr, nullptr, 2, 50.5, &e) ==
          GCDSUM_ERR_DOMAIN);
    CHECK(gcdsum_error_term(ctx, "Th9", 1, 1, &a_half, nullptr, 2, 50.5, &e) ==
          GCDSUM_ERR_CONFIG);
    CHECK(gcdsum_error_term(ctx, "Th1", 1, 1, &a_half, nullptr, 2, 0.5, &e) ==
          GCDSUM_ERR_DOMAIN);
    CHECK(gcdsum_error_term(ctx, "Th1", 1, 1, &a_half, nullptr, 2, 50.5, nullptr) ==
          GCDSUM_ERR_ARGUMENT);
    // the h-parameterized family takes its weight from the selector string
    CHECK(gcdsum_error_term(ctx, "Th6", 1, 2, nullptr, "tau", 2, 20.5, &e) == GCDSUM_OK);
    CHECK(gcdsum_error_term(ctx, "Th6", 1, 2, nullptr, "nu", 2, 20.5, &e) ==
          GCDSUM_ERR_CONFIG);

    double v = 0.0;
    CHECK(gcdsum_delta_divisor(ctx, 1.0, &v) == GCDSUM_OK);
    CHECK(close_abs(v, 0.84556867019693428, 1e-12));  // 2 - 2*gamma
    CHECK(gcdsum_delta_a(ctx, 1.0, -0.5, &v) == GCDSUM_OK);
    CHECK(close_abs(v, 0.578156, 1e-5));
    CHECK(gcdsum_delta_a(ctx, 1.0, 0.0, &v) == GCDSUM_ERR_DOMAIN);

    int ok = -1;
    CHECK(gcdsum_voronoi_delta_a(ctx, 50.0, -0.5, 0, &ok, &v) == GCDSUM_OK);
    CHECK(v == 0.0);
    CHECK(ok == 1);
    CHECK(gcdsum_voronoi_delta_a(ctx, 50.0, -0.5, 51, &ok, &v) == GCDSUM_OK);
    CHECK(ok == 0);
    CHECK(gcdsum_voronoi_delta_a(ctx, 50.0, -0.5, 10, nullptr, &v) == GCDSUM_OK);
    CHECK(std::isfinite(v));
    CHECK(gcdsum_voronoi_delta_a(ctx, 50.0, -1.0, 10, &ok, &v) == GCDSUM_ERR_DOMAIN);

    CHECK(gcdsum_vartheta(ctx, 2.5, &v) == GCDSUM_OK);
    CHECK(v == 0.0);
    CHECK(gcdsum_vartheta(ctx, -0.25, &v) == GCDSUM_OK);
    CHECK(v == 0.25);

    CHECK(gcdsum_d_series(ctx, 10.0, 2, 0, &v) == GCDSUM_OK);
    CHECK(std::fabs(v) < 0.2);
    CHECK(gcdsum_d_series(ctx, 10.0, 2, 1, &v) == GCDSUM_OK);
    CHECK(std::fabs(v) < 0.3);
    CHECK(gcdsum_d_series(ctx, 10.0, 1, 0, &v) == GCDSUM_ERR_DOMAIN);

    CHECK(gcdsum_h_series(ctx, "tau", 3.0, 2, 0, &v) == GCDSUM_OK);
    CHECK(close_abs(v, 1.4449407984334344, 1e-12));  // zeta(3)^2
    double z2 = 0.0, z6 = 0.0;
    CHECK(gcdsum_zeta(ctx, 2.0, &z2) == GCDSUM_OK);
    CHECK(gcdsum_zeta(ctx, 6.0, &z6) == GCDSUM_OK);
    CHECK(gcdsum_h_series(ctx, "xi_q", 2.0, 3, 0, &v) == GCDSUM_OK);
    CHECK(close_rel(v, z2 / z6, 1e-12));
    CHECK(gcdsum_h_series(ctx, "tau", 3.0, 2, 1, &v) == GCDSUM_OK);
    CHECK(v < 0.0);
    CHECK(gcdsum_h_series(ctx, "tau", 1.0, 2, 0, &v) == GCDSUM_ERR_DOMAIN);
    CHECK(gcdsum_h_series(ctx, "nu", 3.0, 2, 0, &v) == GCDSUM_ERR_CONFIG);

    gcdsum_lemma_check lc;
    CHECK(gcdsum_lemma_sum_check(ctx, "lem2-sigma1", 1.0, -0.5, 1, &lc) == GCDSUM_OK);
    CHECK(close_abs(lc.exact, 1.0, 1e-12));
    CHECK(std::isfinite(lc.predicted_main));
    CHECK(std::isfinite(lc.residual));
    CHECK(gcdsum_lemma_sum_check(ctx, "lem2-la", 10.0, -0.5, 0, &lc) == GCDSUM_ERR_DOMAIN);
    CHECK(gcdsum_lemma_sum_check(ctx, "lem9", 10.0, -0.5, 1, &lc) == GCDSUM_ERR_CONFIG);
}

static void mean_square(gcdsum_ctx* ctx) {
    const double a = -0.2;
    const double pi = std::acos(-1.0);

    double value = 0.0, tail = -1.0;
    CHECK(gcdsum_series_constant(ctx, "C2", &a, 1, &value, &tail) == GCDSUM_OK);
    CHECK(close_rel(value, 1.0 / (2.0 * (3.0 + 2.0 * a) * pi * pi), 1e-14));
    CHECK(tail >= 0.0);
    CHECK(gcdsum_series_constant(ctx, "D1", nullptr, 100, &value, nullptr) == GCDSUM_OK);
    CHECK(value > 0.0);
    CHECK(gcdsum_series_constant(ctx, "Kmean", nullptr, 10, &value, &tail) ==
          GCDSUM_ERR_DOMAIN);
    CHECK(gcdsum_series_constant(ctx, "C9", &a, 10, &value, &tail) == GCDSUM_ERR_CONFIG);
    CHECK(gcdsum_series_constant(ctx, "C2", &a, 0, &value, &tail) == GCDSUM_ERR_DOMAIN);
    CHECK(gcdsum_series_constant(ctx, "C2", &a, 10, nullptr, &tail) == GCDSUM_ERR_ARGUMENT);

    double i1 = 0.0, i2 = 0.0;
    CHECK(gcdsum_integrate_k_squared(ctx, "Th3", 1, 1, &a, nullptr, 2, 1.0, &i1) ==
          GCDSUM_OK);
    CHECK(i1 == 0.0);
    CHECK(gcdsum_integrate_k_squared(ctx, "Th3", 1, 1, &a, nullptr, 2, 50.0, &i1) ==
          GCDSUM_OK);
    CHECK(gcdsum_integrate_k_squared(ctx, "Th3", 1, 1, &a, nullptr, 2, 80.0, &i2) ==
          GCDSUM_OK);
    CHECK(i1 > 0.0);
    CHECK(i2 > i1);
    // the raw remainder starts at zero, so even T=1 collects mass
    CHECK(gcdsum_integrate_k_squared(ctx, "delta-a", 1, 1, &a, nullptr, 2, 1.0, &i1) ==
          GCDSUM_OK);
    CHECK(i1 > 0.0);
    CHECK(gcdsum_integrate_k_squared(ctx, "Th9", 1, 1, &a, nullptr, 2, 50.0, &i1) ==
          GCDSUM_ERR_CONFIG);
    CHECK(gcdsum_integrate_k_squared(ctx, "Th3", 1, 1, nullptr, nullptr, 2, 50.0, &i1) ==
          GCDSUM_ERR_DOMAIN);
}

static void runner(gcdsum_ctx* ctx) {
    const char* out_path = "/tmp/gcdsum_capi_tab.csv";

    gcdsum_run_config* cfg = gcdsum_run_config_new();
    CHECK(cfg != nullptr);
    CHECK(gcdsum_run_config_set(ctx, cfg, "command", "tabulate") == GCDSUM_OK);
    CHECK(gcdsum_run_config_set(ctx, cfg, "f", "phi") == GCDSUM_OK);
    CHECK(gcdsum_run_config_set(ctx, cfg, "table_limit", "8") == GCDSUM_OK);
    CHECK(gcdsum_run_config_set(ctx, cfg, "output", out_path) == GCDSUM_OK);
    CHECK(gcdsum_run_config_set(ctx, cfg, "colour", "red") == GCDSUM_ERR_CONFIG);
    CHECK(std::strstr(gcdsum_last_error(ctx), "colour") != nullptr);

    int exit_code = -1;
    CHECK(gcdsum_run(ctx, cfg, &exit_code) == GCDSUM_OK);
    CHECK(exit_code == 0);
    std::string first = slurp(out_path);
    CHECK(first.rfind("n,value\n", 0) == 0);
    CHECK(first.find("\n6,2\n") != std::string::npos);

    // identical configuration reruns byte-identically
    CHECK(gcdsum_run(ctx, cfg, &exit_code) == GCDSUM_OK);
    CHECK(exit_code == 0);
    CHECK(slurp(out_path) == first);

    // a config file layered over the handle
    const char* cfg_path = "/tmp/gcdsum_capi_cfg.txt";
    {
        std::ofstream f(cfg_path);
        f << "# identity spot check\ncommand = verify-identity\nf = psi\n"
          << "r = 1\nx_max = 40\n";
    }
    CHECK(gcdsum_run_config_load_file(ctx, cfg, cfg_path) == GCDSUM_OK);
    CHECK(gcdsum_run(ctx, cfg, &exit_code) == GCDSUM_OK);
    CHECK(exit_code == 0);
    std::string csv = slurp(out_path);
    CHECK(csv.rfind("x,r,s,f,lhs,rhs,discrepancy\n", 0) == 0);
    CHECK(csv.find(",psi,") != std::string::npos);

    // bad command surfaces as exit code 1, not a status failure
    CHECK(gcdsum_run_config_set(ctx, cfg, "command", "fold") == GCDSUM_OK);
    CHECK(gcdsum_run(ctx, cfg, &exit_code) == GCDSUM_OK);
    CHECK(exit_code == 1);

    CHECK(gcdsum_run(ctx, cfg, nullptr) == GCDSUM_ERR_ARGUMENT);
    CHECK(gcdsum_run(ctx, nullptr, &exit_code) == GCDSUM_ERR_ARGUMENT);
    CHECK(gcdsum_run_config_load_file(ctx, cfg, "/tmp/gcdsum_no_such.cfg") ==
          GCDSUM_ERR_CONFIG);
    CHECK(gcdsum_run_config_set(ctx, nullptr, "r", "1") == GCDSUM_ERR_ARGUMENT);

    gcdsum_run_config_free(cfg);
    std::remove(out_path);
    std::remove(cfg_path);
}

int main() {
    CHECK(std::strcmp(gcdsum_last_error(nullptr), "") == 0);

    gcdsum_ctx* ctx = gcdsum_ctx_new();
    if (!ctx) {
        std::fprintf(stderr, "FAIL: gcdsum_ctx_new returned null\n");
        return 1;
    }
    CHECK(std::strcmp(gcdsum_last_error(ctx), "") == 0);

    special_values(ctx);
    tables(ctx);
    weighted_sums(ctx);
    asymptotics(ctx);
    mean_square(ctx);
    runner(ctx);

    gcdsum_ctx_free(ctx);
    gcdsum_ctx_free(nullptr);

    if (failures) {
        std::fprintf(stderr, "%d C API check(s) failed\n", failures);
        return 1;
    }
    std::printf("C API checks passed\n");
    return 0;
}
