// Shared-library boundary: opaque handles over the core types, exceptions
// folded into status codes, and the last error message parked on the context.

#include "gcdsum/gcdsum.h"

#include <cstdio>
#include <cstring>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "core/asymptotics.hpp"
#include "core/errors.hpp"
#include "core/fn_table.hpp"
#include "core/gcd_sums.hpp"
#include "core/mean_square.hpp"
#include "core/run.hpp"
#include "core/special_values.hpp"

struct gcdsum_ctx {
    std::string last_error;
};

struct gcdsum_table {
    gcdsum::FnTable table;
};

struct gcdsum_run_config {
    gcdsum::RunConfig cfg;
};

namespace {

using gcdsum::Real;

// Buffer-too-small and null-argument failures inside a guarded body.
struct argument_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename Fn>
gcdsum_status guarded(gcdsum_ctx* ctx, Fn&& fn) {
    if (!ctx) return GCDSUM_ERR_ARGUMENT;
    try {
        fn();
        return GCDSUM_OK;
    } catch (const argument_error& e) {
        ctx->last_error = e.what();
        return GCDSUM_ERR_ARGUMENT;
    } catch (const gcdsum::domain_error& e) {
        ctx->last_error = e.what();
        return GCDSUM_ERR_DOMAIN;
    } catch (const gcdsum::config_error& e) {
        ctx->last_error = e.what();
        return GCDSUM_ERR_CONFIG;
    } catch (const gcdsum::range_error& e) {
        ctx->last_error = e.what();
        return GCDSUM_ERR_RANGE;
    } catch (const gcdsum::backend_error& e) {
        ctx->last_error = e.what();
        return GCDSUM_ERR_BACKEND;
    } catch (const gcdsum::budget_error& e) {
        ctx->last_error = e.what();
        return GCDSUM_ERR_BUDGET;
    } catch (const std::bad_alloc&) {
        ctx->last_error = "out of memory";
        return GCDSUM_ERR_INTERNAL;
    } catch (const std::invalid_argument& e) {
        ctx->last_error = e.what();
        return GCDSUM_ERR_DOMAIN;
    } catch (const std::out_of_range& e) {
        ctx->last_error = e.what();
        return GCDSUM_ERR_RANGE;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return GCDSUM_ERR_INTERNAL;
    }
}

void require(bool ok, const char* what) {
    if (!ok) throw argument_error(what);
}

void put_str(const std::string& s, char* buf, size_t cap) {
    require(buf != nullptr && cap > 0, "output buffer is null or empty");
    if (s.size() + 1 > cap) throw argument_error("output buffer too small");
    std::memcpy(buf, s.c_str(), s.size() + 1);
}

std::string real_str(Real v) {
    char tmp[64];
    std::snprintf(tmp, sizeof tmp, "%.17Lg", v);
    return std::string(tmp);
}

std::optional<Real> opt_a(const double* a) {
    if (!a) return std::nullopt;
    return static_cast<Real>(*a);
}

gcdsum::SumParams make_params(uint32_t r, uint32_t s, const double* a, const char* h,
                              uint32_t q) {
    gcdsum::SumParams p;
    p.r = r;
    p.s = s;
    p.a = opt_a(a);
    p.h = h ? gcdsum::parse_h_kind(h) : gcdsum::HKind::mu;
    p.q = q;
    return p;
}

const gcdsum::FnTable& table_of(const gcdsum_table* t) {
    require(t != nullptr, "table handle is null");
    return t->table;
}

// f * mu over the table's own limit, matching the backend of f.
gcdsum::FnTable convolve_mu(const gcdsum::FnTable& f) {
    gcdsum::FnTable mu = gcdsum::sieve(gcdsum::FnSpec::parse("mu"), f.limit());
    return gcdsum::dirichlet_convolve(f, mu);
}

}  // namespace

extern "C" {

/* ------------------------------------------------------------------ context */

gcdsum_ctx* gcdsum_ctx_new(void) { return new (std::nothrow) gcdsum_ctx(); }

void gcdsum_ctx_free(gcdsum_ctx* ctx) { delete ctx; }

const char* gcdsum_last_error(const gcdsum_ctx* ctx) {
    return ctx ? ctx->last_error.c_str() : "";
}

/* ----------------------------------------------------------- special values */

gcdsum_status gcdsum_zeta(gcdsum_ctx* ctx, double sigma, double* out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out pointer is null");
        *out = static_cast<double>(gcdsum::zeta(static_cast<Real>(sigma)));
    });
}

gcdsum_status gcdsum_zeta_prime(gcdsum_ctx* ctx, double sigma, double* out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out pointer is null");
        *out = static_cast<double>(gcdsum::zeta_prime(static_cast<Real>(sigma)));
    });
}

gcdsum_status gcdsum_zeta_configured(gcdsum_ctx* ctx, double sigma, uint32_t cut,
                                     uint32_t terms, double* out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out pointer is null");
        gcdsum::ZetaConfig cfg;
        cfg.cut = cut;
        cfg.terms = terms;
        *out = static_cast<double>(gcdsum::zeta(static_cast<Real>(sigma), cfg));
    });
}

gcdsum_status gcdsum_bernoulli_even_str(gcdsum_ctx* ctx, uint32_t m, char* buf,
                                        size_t cap) {
    return guarded(ctx, [&] { put_str(gcdsum::rat_to_string(gcdsum::bernoulli_even(m)), buf, cap); });
}

gcdsum_status gcdsum_euler_gamma(gcdsum_ctx* ctx, double* out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out pointer is null");
        *out = static_cast<double>(gcdsum::euler_gamma());
    });
}

gcdsum_status gcdsum_delta_decay(gcdsum_ctx* ctx, double x, double c, double* out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out pointer is null");
        *out = static_cast<double>(
            gcdsum::delta_decay(static_cast<Real>(x), static_cast<Real>(c)));
    });
}

/* ------------------------------------------------------------------- tables */

gcdsum_status gcdsum_table_sieve(gcdsum_ctx* ctx, const char* spec, uint64_t limit,
                                 gcdsum_table** out) {
    return guarded(ctx, [&] {
        require(spec != nullptr, "spec string is null");
        require(out != nullptr, "out pointer is null");
        gcdsum::FnTable t = gcdsum::sieve(gcdsum::FnSpec::parse(spec), limit);
        *out = new gcdsum_table{std::move(t)};
    });
}

gcdsum_status gcdsum_table_convolve(gcdsum_ctx* ctx, const gcdsum_table* f,
                                    const gcdsum_table* g, gcdsum_table** out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out pointer is null");
        gcdsum::FnTable t = gcdsum::dirichlet_convolve(table_of(f), table_of(g));
        *out = new gcdsum_table{std::move(t)};
    });
}

void gcdsum_table_free(gcdsum_table* t) { delete t; }

uint64_t gcdsum_table_limit(const gcdsum_table* t) { return t ? t->table.limit() : 0; }

int gcdsum_table_is_exact(const gcdsum_table* t) {
    return (t && t->table.is_exact()) ? 1 : 0;
}

const char* gcdsum_table_label(const gcdsum_table* t) {
    return t ? t->table.label().c_str() : "";
}

gcdsum_status gcdsum_table_value(gcdsum_ctx* ctx, const gcdsum_table* t, uint64_t n,
                                 double* out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out pointer is null");
        *out = static_cast<double>(table_of(t).real(n));
    });
}

gcdsum_status gcdsum_table_value_str(gcdsum_ctx* ctx, const gcdsum_table* t, uint64_t n,
                                     char* buf, size_t cap) {
    return guarded(ctx, [&] {
        const gcdsum::FnTable& tab = table_of(t);
        std::string s =
            tab.is_exact() ? gcdsum::rat_to_string(tab.rat(n)) : real_str(tab.real(n));
        put_str(s, buf, cap);
    });
}

gcdsum_status gcdsum_partial_sum(gcdsum_ctx* ctx, const gcdsum_table* t, double x,
                                 double* out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out pointer is null");
        *out = static_cast<double>(
            gcdsum::partial_sum(table_of(t), static_cast<Real>(x)).real());
    });
}

gcdsum_status gcdsum_summatory_sigma_a(gcdsum_ctx* ctx, double x, double a, double* out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out pointer is null");
        *out = static_cast<double>(
            gcdsum::summatory_sigma_a(static_cast<Real>(x), static_cast<Real>(a)));
    });
}

/* ----------------------------------------------------------- weighted sums */

gcdsum_status gcdsum_pillai(gcdsum_ctx* ctx, const gcdsum_table* f, uint64_t k,
                            uint32_t r, int direct_route, double* out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out pointer is null");
        const gcdsum::FnTable& tab = table_of(f);
        if (!tab.is_exact()) {
            *out = static_cast<double>(gcdsum::pillai_weighted_real(tab, k, r));
            return;
        }
        gcdsum::Rat v = direct_route ? gcdsum::pillai_weighted_direct(tab, k, r)
                                     : gcdsum::pillai_weighted(tab, k, r);
        *out = static_cast<double>(gcdsum::to_real(v));
    });
}

gcdsum_status gcdsum_m_r(gcdsum_ctx* ctx, const gcdsum_table* f, double x, uint32_t r,
                         double* out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out pointer is null");
        *out = static_cast<double>(
            gcdsum::m_r_exact(table_of(f), static_cast<Real>(x), r).real());
    });
}

gcdsum_status gcdsum_m_r_str(gcdsum_ctx* ctx, const gcdsum_table* f, double x, uint32_t r,
                             char* buf, size_t cap) {
    return guarded(ctx, [&] {
        put_str(gcdsum::m_r_exact(table_of(f), static_cast<Real>(x), r).str(), buf, cap);
    });
}

gcdsum_status gcdsum_m_r_rhs(gcdsum_ctx* ctx, const gcdsum_table* f, double x, uint32_t r,
                             double* out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out pointer is null");
        *out = static_cast<double>(
            gcdsum::m_r_identity_rhs(table_of(f), static_cast<Real>(x), r).real());
    });
}

gcdsum_status gcdsum_m_r_rhs_str(gcdsum_ctx* ctx, const gcdsum_table* f, double x,
                                 uint32_t r, char* buf, size_t cap) {
    return guarded(ctx, [&] {
        put_str(gcdsum::m_r_identity_rhs(table_of(f), static_cast<Real>(x), r).str(), buf,
                cap);
    });
}

gcdsum_status gcdsum_m_rs(gcdsum_ctx* ctx, const gcdsum_table* f, double x, uint32_t r,
                          uint32_t s, uint64_t budget, double* out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out pointer is null");
        const gcdsum::FnTable& tab = table_of(f);
        gcdsum::FnTable f_mu = convolve_mu(tab);
        *out = static_cast<double>(
            gcdsum::m_rs_exact(tab, f_mu, static_cast<Real>(x), r, s, budget).real());
    });
}

gcdsum_status gcdsum_m_rs_str(gcdsum_ctx* ctx, const gcdsum_table* f, double x, uint32_t r,
                              uint32_t s, uint64_t budget, char* buf, size_t cap) {
    return guarded(ctx, [&] {
        const gcdsum::FnTable& tab = table_of(f);
        gcdsum::FnTable f_mu = convolve_mu(tab);
        put_str(gcdsum::m_rs_exact(tab, f_mu, static_cast<Real>(x), r, s, budget).str(),
                buf, cap);
    });
}

gcdsum_status gcdsum_m_rs_rhs(gcdsum_ctx* ctx, const gcdsum_table* f, double x, uint32_t r,
                              uint32_t s, double* out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out pointer is null");
        const gcdsum::FnTable& tab = table_of(f);
        gcdsum::FnTable f_mu = convolve_mu(tab);
        *out = static_cast<double>(
            gcdsum::m_rs_identity_rhs(tab, f_mu, static_cast<Real>(x), r, s).real());
    });
}

gcdsum_status gcdsum_m_rs_rhs_str(gcdsum_ctx* ctx, const gcdsum_table* f, double x,
                                  uint32_t r, uint32_t s, char* buf, size_t cap) {
    return guarded(ctx, [&] {
        const gcdsum::FnTable& tab = table_of(f);
        gcdsum::FnTable f_mu = convolve_mu(tab);
        put_str(gcdsum::m_rs_identity_rhs(tab, f_mu, static_cast<Real>(x), r, s).str(), buf,
                cap);
    });
}

gcdsum_status gcdsum_generalized_gcd(gcdsum_ctx* ctx, uint64_t j, uint64_t k, uint32_t s,
                                     uint64_t* out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out pointer is null");
        *out = gcdsum::generalized_gcd(j, k, s);
    });
}

gcdsum_status gcdsum_ramanujan_sum(gcdsum_ctx* ctx, uint64_t k, uint64_t j, int64_t* out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out pointer is null");
        *out = gcdsum::ramanujan_sum(k, j);
    });
}

gcdsum_status gcdsum_cohen_sum(gcdsum_ctx* ctx, uint64_t k, uint64_t j, uint32_t s,
                               int64_t* out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out pointer is null");
        *out = gcdsum::cohen_sum(k, j, s);
    });
}

gcdsum_status gcdsum_anderson_apostol(gcdsum_ctx* ctx, const gcdsum_table* f,
                                      const gcdsum_table* g, uint64_t k, uint64_t j,
                                      uint32_t s, double* out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out pointer is null");
        *out = static_cast<double>(
            gcdsum::anderson_apostol_sum(table_of(f), table_of(g), k, j, s).real());
    });
}

/* -------------------------------------------------------------- asymptotics */

gcdsum_status gcdsum_error_term(gcdsum_ctx* ctx, const char* theorem, uint32_t r,
                                uint32_t s, const double* a, const char* h, uint32_t q,
                                double x, gcdsum_error_sample* out) {
    return guarded(ctx, [&] {
        require(theorem != nullptr, "theorem selector is null");
        require(out != nullptr, "out pointer is null");
        gcdsum::ErrorSample e = gcdsum::error_term(gcdsum::parse_theorem(theorem),
                                                   make_params(r, s, a, h, q),
                                                   static_cast<Real>(x));
        out->x = static_cast<double>(e.x);
        out->exact = static_cast<double>(e.exact);
        out->main_term = static_cast<double>(e.main);
        out->k = static_cast<double>(e.K);
        out->k_formula = static_cast<double>(e.K_formula);
        out->residual = static_cast<double>(e.residual);
    });
}

gcdsum_status gcdsum_main_term(gcdsum_ctx* ctx, const char* theorem, uint32_t r,
                               uint32_t s, const double* a, const char* h, uint32_t q,
                               double x, double* out) {
    return guarded(ctx, [&] {
        require(theorem != nullptr, "theorem selector is null");
        require(out != nullptr, "out pointer is null");
        gcdsum::MainTermModel m =
            gcdsum::main_term_model(gcdsum::parse_theorem(theorem), make_params(r, s, a, h, q));
        *out = static_cast<double>(gcdsum::main_term(m, static_cast<Real>(x)));
    });
}

gcdsum_status gcdsum_main_term_coeffs(gcdsum_ctx* ctx, const char* theorem, uint32_t r,
                                      uint32_t s, const double* a, const char* h,
                                      uint32_t q, double* c_xlogx, double* c_x,
                                      double* c_x1pa, double* exponent) {
    return guarded(ctx, [&] {
        require(theorem != nullptr, "theorem selector is null");
        gcdsum::MainTermModel m =
            gcdsum::main_term_model(gcdsum::parse_theorem(theorem), make_params(r, s, a, h, q));
        if (c_xlogx) *c_xlogx = static_cast<double>(m.c_xlogx);
        if (c_x) *c_x = static_cast<double>(m.c_x);
        if (c_x1pa) *c_x1pa = static_cast<double>(m.c_x1pa);
        if (exponent) *exponent = static_cast<double>(m.exponent);
    });
}

gcdsum_status gcdsum_delta_divisor(gcdsum_ctx* ctx, double x, double* out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out pointer is null");
        *out = static_cast<double>(gcdsum::delta_divisor(static_cast<Real>(x)));
    });
}

gcdsum_status gcdsum_delta_a(gcdsum_ctx* ctx, double x, double a, double* out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out pointer is null");
        *out = static_cast<double>(
            gcdsum::delta_a(static_cast<Real>(x), static_cast<Real>(a)));
    });
}

gcdsum_status gcdsum_voronoi_delta_a(gcdsum_ctx* ctx, double x, double a, uint64_t N,
                                     int* truncation_ok, double* out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out pointer is null");
        bool ok = false;
        *out = static_cast<double>(gcdsum::voronoi_delta_a(
            static_cast<Real>(x), static_cast<Real>(a), N, &ok));
        if (truncation_ok) *truncation_ok = ok ? 1 : 0;
    });
}

gcdsum_status gcdsum_vartheta(gcdsum_ctx* ctx, double x, double* out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out pointer is null");
        *out = static_cast<double>(gcdsum::vartheta(static_cast<Real>(x)));
    });
}

gcdsum_status gcdsum_d_series(gcdsum_ctx* ctx, double x, uint32_t s, int tilde,
                              double* out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out pointer is null");
        Real v = tilde ? gcdsum::d_series_tilde(static_cast<Real>(x), s)
                       : gcdsum::d_series(static_cast<Real>(x), s);
        *out = static_cast<double>(v);
    });
}

gcdsum_status gcdsum_h_series(gcdsum_ctx* ctx, const char* h, double sigma, uint32_t q,
                              int derivative, double* out) {
    return guarded(ctx, [&] {
        require(h != nullptr, "weight selector is null");
        require(out != nullptr, "out pointer is null");
        gcdsum::HKind kind = gcdsum::parse_h_kind(h);
        Real v = derivative ? gcdsum::h_series_prime(kind, static_cast<Real>(sigma), q)
                            : gcdsum::h_series(kind, static_cast<Real>(sigma), q);
        *out = static_cast<double>(v);
    });
}

gcdsum_status gcdsum_lemma_sum_check(gcdsum_ctx* ctx, const char* lemma, double x,
                                     double a, uint32_t m, gcdsum_lemma_check* out) {
    return guarded(ctx, [&] {
        require(lemma != nullptr, "lemma selector is null");
        require(out != nullptr, "out pointer is null");
        gcdsum::LemmaCheck c = gcdsum::lemma_sum_check(
            gcdsum::parse_lemma(lemma), static_cast<Real>(x), static_cast<Real>(a), m);
        out->exact = static_cast<double>(c.exact);
        out->predicted_main = static_cast<double>(c.predicted_main);
        out->residual = static_cast<double>(c.residual);
    });
}

/* -------------------------------------------------------------- mean square */

gcdsum_status gcdsum_series_constant(gcdsum_ctx* ctx, const char* kind, const double* a,
                                     uint64_t N, double* value, double* tail) {
    return guarded(ctx, [&] {
        require(kind != nullptr, "series selector is null");
        require(value != nullptr, "value pointer is null");
        gcdsum::SeriesConstant c =
            gcdsum::series_constant(gcdsum::parse_series_kind(kind), opt_a(a), N);
        *value = static_cast<double>(c.value);
        if (tail) *tail = static_cast<double>(c.tail_bound);
    });
}

gcdsum_status gcdsum_integrate_k_squared(gcdsum_ctx* ctx, const char* kind, uint32_t r,
                                         uint32_t s, const double* a, const char* h,
                                         uint32_t q, double T, double* out) {
    return guarded(ctx, [&] {
        require(kind != nullptr, "law selector is null");
        require(out != nullptr, "out pointer is null");
        *out = static_cast<double>(
            gcdsum::integrate_K_squared(gcdsum::parse_mean_square_kind(kind),
                                        make_params(r, s, a, h, q), static_cast<Real>(T)));
    });
}

/* ------------------------------------------------------------------- runner */

gcdsum_run_config* gcdsum_run_config_new(void) {
    return new (std::nothrow) gcdsum_run_config();
}

void gcdsum_run_config_free(gcdsum_run_config* cfg) { delete cfg; }

gcdsum_status gcdsum_run_config_set(gcdsum_ctx* ctx, gcdsum_run_config* cfg,
                                    const char* key, const char* value) {
    return guarded(ctx, [&] {
        require(cfg != nullptr, "run config handle is null");
        require(key != nullptr, "key is null");
        require(value != nullptr, "value is null");
        cfg->cfg.apply_kv(key, value);
    });
}

gcdsum_status gcdsum_run_config_load_file(gcdsum_ctx* ctx, gcdsum_run_config* cfg,
                                          const char* path) {
    return guarded(ctx, [&] {
        require(cfg != nullptr, "run config handle is null");
        require(path != nullptr, "path is null");
        cfg->cfg.load_file(path);
    });
}

gcdsum_status gcdsum_run(gcdsum_ctx* ctx, const gcdsum_run_config* cfg, int* exit_code) {
    return guarded(ctx, [&] {
        require(cfg != nullptr, "run config handle is null");
        require(exit_code != nullptr, "exit_code pointer is null");
        *exit_code = gcdsum::run(cfg->cfg);
    });
}

} /* extern "C" */
