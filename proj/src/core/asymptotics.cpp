#include "core/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "core/special_values.hpp"

namespace gcdsum {

// ----------------------------------------------------------------- selectors

namespace {

std::string strip_braces(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (c != '{' && c != '}') out.push_back(c);
    return out;
}

// Internal weight selector: the public HKind plus the convolution unit
// (f = id_s itself), which unifies the coefficient formulas.
enum class WeightH { unit, mu, abs_mu, tau, xi_q };

WeightH to_weight(HKind h) {
    switch (h) {
        case HKind::mu: return WeightH::mu;
        case HKind::abs_mu: return WeightH::abs_mu;
        case HKind::tau: return WeightH::tau;
        case HKind::xi_q: return WeightH::xi_q;
    }
    throw domain_error("bad h kind");
}

struct Family {
    WeightH h;        // f = h * id_{s(+a)}
    bool fractional;  // x^{1+a} family vs x log x family
    bool s_weighted;  // d-weights d^{-s} with s >= 2
    bool h_free;      // h comes from params
};

Family family_of(TheoremId id) {
    switch (id) {
        case TheoremId::K_id: return {WeightH::unit, false, false, false};
        case TheoremId::K_phi: return {WeightH::mu, false, false, false};
        case TheoremId::gcd331: return {WeightH::abs_mu, false, false, false};
        case TheoremId::Th1: return {WeightH::unit, true, false, false};
        case TheoremId::Th2_phi: return {WeightH::mu, true, false, false};
        case TheoremId::Th2_psi: return {WeightH::abs_mu, true, false, false};
        case TheoremId::Th5: return {WeightH::unit, true, true, false};
        case TheoremId::Th6_h: return {WeightH::mu, false, true, true};
        case TheoremId::Th7_h: return {WeightH::mu, true, true, true};
        case TheoremId::Cor_phi_s: return {WeightH::mu, false, true, false};
        case TheoremId::Cor_psi_s: return {WeightH::abs_mu, false, true, false};
        case TheoremId::Cor_tau: return {WeightH::tau, false, true, false};
        case TheoremId::Cor_phi_sa: return {WeightH::mu, true, true, false};
        case TheoremId::Cor_psi_sa: return {WeightH::abs_mu, true, true, false};
        case TheoremId::Cor_tau_sa: return {WeightH::tau, true, true, false};
    }
    throw domain_error("bad theorem id");
}

Real weight_series(WeightH h, Real sigma, unsigned q) {
    if (h == WeightH::unit) return 1.0L;
    return h_series(h == WeightH::mu      ? HKind::mu
                    : h == WeightH::abs_mu ? HKind::abs_mu
                    : h == WeightH::tau    ? HKind::tau
                                           : HKind::xi_q,
                    sigma, q);
}

Real weight_series_prime(WeightH h, Real sigma, unsigned q) {
    if (h == WeightH::unit) return 0.0L;
    return h_series_prime(h == WeightH::mu      ? HKind::mu
                          : h == WeightH::abs_mu ? HKind::abs_mu
                          : h == WeightH::tau    ? HKind::tau
                                                 : HKind::xi_q,
                          sigma, q);
}

Real binom_real(unsigned n, unsigned k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return to_real(b);
}

// sum_{m=1}^{[r/2]} binom(r+1, 2m) B_{2m} zeta(2ms + shift)
Real bernoulli_zeta_block(unsigned r, unsigned s, Real shift) {
    Real acc = 0.0L;
    for (unsigned m = 1; 2 * m <= r; ++m)
        acc += binom_real(r + 1, 2 * m) * to_real(bernoulli_even(m)) *
               zeta((Real)(2 * m * s) + shift);
    return acc;
}

}  // namespace

TheoremId parse_theorem(const std::string& token) {
    const std::string t = strip_braces(token);
    if (t == "K-id") return TheoremId::K_id;
    if (t == "K-phi") return TheoremId::K_phi;
    if (t == "gcd331") return TheoremId::gcd331;
    if (t == "Th1") return TheoremId::Th1;
    if (t == "Th2-phi") return TheoremId::Th2_phi;
    if (t == "Th2-psi") return TheoremId::Th2_psi;
    if (t == "Th5") return TheoremId::Th5;
    if (t == "Th6") return TheoremId::Th6_h;
    if (t == "Th7") return TheoremId::Th7_h;
    if (t == "Cor-phi_s") return TheoremId::Cor_phi_s;
    if (t == "Cor-psi_s") return TheoremId::Cor_psi_s;
    if (t == "Cor-tau") return TheoremId::Cor_tau;
    if (t == "Cor-phi_s+a") return TheoremId::Cor_phi_sa;
    if (t == "Cor-psi_s+a") return TheoremId::Cor_psi_sa;
    if (t == "Cor-tau_s+a") return TheoremId::Cor_tau_sa;
    throw config_error("unknown theorem selector '" + token + "'");
}

std::string theorem_token(TheoremId id) {
    switch (id) {
        case TheoremId::K_id: return "K-id";
        case TheoremId::K_phi: return "K-phi";
        case TheoremId::gcd331: return "gcd331";
        case TheoremId::Th1: return "Th1";
        case TheoremId::Th2_phi: return "Th2-phi";
        case TheoremId::Th2_psi: return "Th2-psi";
        case TheoremId::Th5: return "Th5";
        case TheoremId::Th6_h: return "Th6";
        case TheoremId::Th7_h: return "Th7";
        case TheoremId::Cor_phi_s: return "Cor-phi_s";
        case TheoremId::Cor_psi_s: return "Cor-psi_s";
        case TheoremId::Cor_tau: return "Cor-tau";
        case TheoremId::Cor_phi_sa: return "Cor-phi_s+a";
        case TheoremId::Cor_psi_sa: return "Cor-psi_s+a";
        case TheoremId::Cor_tau_sa: return "Cor-tau_s+a";
    }
    return "?";
}

HKind parse_h_kind(const std::string& token) {
    if (token == "mu") return HKind::mu;
    if (token == "abs_mu") return HKind::abs_mu;
    if (token == "tau") return HKind::tau;
    if (token == "xi_q" || token.rfind("xi_q(", 0) == 0) return HKind::xi_q;
    throw config_error("unknown h selector '" + token + "'");
}

std::string h_kind_token(HKind h) {
    switch (h) {
        case HKind::mu: return "mu";
        case HKind::abs_mu: return "abs_mu";
        case HKind::tau: return "tau";
        case HKind::xi_q: return "xi_q";
    }
    return "?";
}

// ---------------------------------------------------------------- main term

MainTermModel main_term_model(TheoremId id, const SumParams& p_in) {
    Family fam = family_of(id);
    SumParams p = p_in;
    if (p.r < 1 || p.r > 12) throw domain_error("main_term_model: r outside 1..12");
    if (fam.s_weighted) {
        if (p.s < 2 || p.s > 16) throw domain_error("main_term_model: s outside 2..16");
    } else {
        p.s = 1;
    }
    if (fam.h_free)
        fam.h = to_weight(p.h);
    else
        p.h = fam.h == WeightH::mu      ? HKind::mu
              : fam.h == WeightH::abs_mu ? HKind::abs_mu
              : fam.h == WeightH::tau    ? HKind::tau
                                         : HKind::mu;
    if (fam.fractional) {
        if (!p.a) throw domain_error("main_term_model: this family needs an exponent a");
        RealExponent::open(*p.a, -1.0L, 0.0L, "main_term_model");
    } else {
        p.a.reset();
    }

    MainTermModel m;
    m.id = id;
    m.params = p;
    const unsigned r = p.r;
    const unsigned s = p.s;
    const Real zs1 = zeta((Real)s + 1.0L);

    if (!fam.fractional) {
        const Real H1 = weight_series(fam.h, (Real)s + 1.0L, p.q);
        const Real H1p = weight_series_prime(fam.h, (Real)s + 1.0L, p.q);
        m.c_xlogx = H1 / ((Real)(r + 1) * zs1);
        m.c_x = H1 / 2.0L +
                (H1 / ((Real)(r + 1) * zs1)) *
                    (2.0L * euler_gamma() - 1.0L - zeta_prime((Real)s + 1.0L) / zs1 + H1p / H1 +
                     bernoulli_zeta_block(r, s, 1.0L));
    } else {
        const Real a = *p.a;
        const Real H1 = weight_series(fam.h, (Real)s + 1.0L, p.q);
        const Real Ha = weight_series(fam.h, (Real)s + a + 1.0L, p.q);
        m.c_x = zeta(1.0L - a) * H1 / ((Real)(r + 1) * zs1);
        m.c_x1pa = Ha / (2.0L * (1.0L + a)) +
                   (Ha / ((Real)(r + 1) * (1.0L + a) * zeta((Real)s + a + 1.0L))) *
                       (zeta(1.0L + a) + bernoulli_zeta_block(r, s, a + 1.0L));
        m.exponent = 1.0L + a;
    }
    return m;
}

Real main_term(const MainTermModel& m, Real x) {
    if (!(x >= 1.0L)) throw domain_error("main_term: requires x >= 1");
    Real v = m.c_x * x;
    if (m.c_xlogx != 0.0L) v += m.c_xlogx * x * std::log(x);
    if (m.c_x1pa != 0.0L) v += m.c_x1pa * std::pow(x, m.exponent);
    return v;
}

// ------------------------------------------------------------ small pieces

Real vartheta(Real x) { return x - std::floor(x) - 0.5L; }

namespace {

Real sawtooth_weighted_sum(Real x, unsigned s, const FnTable& w) {
    const std::uint64_t X = floor_u64(x);
    if (X > w.limit()) throw range_error("sawtooth sum: x beyond table limit");
    CompensatedSum acc;
    for (std::uint64_t d = 1; d <= X; ++d) {
        const Real wd = w.real(d);
        if (wd == 0.0L) continue;
        const Real frac = x / (Real)d - (Real)(X / d) - 0.5L;
        acc.add(wd * std::pow((Real)d, -(Real)s) * frac);
    }
    return acc.value();
}

}  // namespace

Real d_series(Real x, unsigned s, const FnTable* mu_table) {
    if (!(x >= 1.0L)) throw domain_error("d_series: requires x >= 1");
    if (s < 2) throw domain_error("d_series: requires s >= 2");
    FnTable local;
    if (!mu_table) {
        local = sieve(FnSpec{FnKind::mu}, floor_u64(x), Backend::real);
        mu_table = &local;
    }
    return -sawtooth_weighted_sum(x, s, *mu_table) - 0.5L / zeta((Real)s);
}

Real d_series_tilde(Real x, unsigned s, const FnTable* abs_mu_table) {
    if (!(x >= 1.0L)) throw domain_error("d_series_tilde: requires x >= 1");
    if (s < 2) throw domain_error("d_series_tilde: requires s >= 2");
    FnTable local;
    if (!abs_mu_table) {
        local = sieve(FnSpec{FnKind::abs_mu}, floor_u64(x), Backend::real);
        abs_mu_table = &local;
    }
    return -sawtooth_weighted_sum(x, s, *abs_mu_table) -
           zeta((Real)s) / (2.0L * zeta(2.0L * (Real)s));
}

Real h_series(HKind h, Real sigma, unsigned q) {
    if (!(sigma > 1.0L)) throw domain_error("h_series: requires sigma > 1");
    switch (h) {
        case HKind::mu: return 1.0L / zeta(sigma);
        case HKind::abs_mu: return zeta(sigma) / zeta(2.0L * sigma);
        case HKind::tau: {
            const Real z = zeta(sigma);
            return z * z;
        }
        case HKind::xi_q:
            if (q < 2) throw domain_error("h_series: xi_q needs q >= 2");
            return zeta(sigma) / zeta((Real)q * sigma);
    }
    throw domain_error("h_series: bad kind");
}

Real h_series_prime(HKind h, Real sigma, unsigned q) {
    if (!(sigma > 1.0L)) throw domain_error("h_series_prime: requires sigma > 1");
    const Real z = zeta(sigma);
    const Real zp = zeta_prime(sigma);
    switch (h) {
        case HKind::mu: return -zp / (z * z);
        case HKind::abs_mu: {
            const Real z2 = zeta(2.0L * sigma);
            const Real z2p = zeta_prime(2.0L * sigma);
            return (zp * z2 - 2.0L * z2p * z) / (z2 * z2);
        }
        case HKind::tau: return 2.0L * z * zp;
        case HKind::xi_q: {
            if (q < 2) throw domain_error("h_series_prime: xi_q needs q >= 2");
            const Real zq = zeta((Real)q * sigma);
            const Real zqp = zeta_prime((Real)q * sigma);
            return (zp * zq - (Real)q * zqp * z) / (zq * zq);
        }
    }
    throw domain_error("h_series_prime: bad kind");
}

Real delta_divisor(Real x) {
    if (!(x >= 1.0L)) throw domain_error("delta_divisor: requires x >= 1");
    const std::uint64_t X = floor_u64(x);
    return (Real)summatory_tau(X) - x * std::log(x) - (2.0L * euler_gamma() - 1.0L) * x;
}

Real delta_a(Real x, Real a) {
    RealExponent::open(a, -1.0L, 0.0L, "delta_a");
    if (!(x >= 1.0L)) throw domain_error("delta_a: requires x >= 1");
    const Real smooth = zeta(1.0L - a) * x +
                        zeta(1.0L + a) / (1.0L + a) * std::pow(x, 1.0L + a) -
                        zeta(-a) / 2.0L;
    return summatory_sigma_a(x, a) - smooth;
}

Real voronoi_delta_a(Real x, Real a, std::uint64_t N, bool* truncation_ok) {
    RealExponent::open(a, -1.0L, 0.0L, "voronoi_delta_a");
    if (!(x >= 1.0L)) throw domain_error("voronoi_delta_a: requires x >= 1");
    if (truncation_ok) *truncation_ok = ((Real)N <= x);
    if (N == 0) return 0.0L;
    const FnTable sig = sieve(FnSpec{FnKind::sigma_a, a}, N, Backend::real);
    const Real pi = std::acos(-1.0L);
    CompensatedSum acc;
    for (std::uint64_t n = 1; n <= N; ++n) {
        const Real arg = 4.0L * pi * std::sqrt((Real)n * x) - pi / 4.0L;
        acc.add(sig.real(n) * std::pow((Real)n, -0.75L - a / 2.0L) * std::cos(arg));
    }
    return std::pow(x, 0.25L + a / 2.0L) / (pi * std::sqrt(2.0L)) * acc.value();
}

// ------------------------------------------------------------- summatories

SigmaSummatory::SigmaSummatory(Real a, std::uint64_t limit)
    : a_(RealExponent::open(a, -1.0L, 0.0L, "SigmaSummatory").value), limit_(limit) {
    const FnTable sig = sieve(FnSpec{FnKind::sigma_a, a_}, limit, Backend::real);
    prefix_.assign(static_cast<std::size_t>(limit) + 1, 0.0L);
    CompensatedSum acc;
    for (std::uint64_t n = 1; n <= limit; ++n) {
        acc.add(sig.real(n));
        prefix_[static_cast<std::size_t>(n)] = acc.value();
    }
    z1ma_ = zeta(1.0L - a_);
    z1pa_ = zeta(1.0L + a_);
    zma_ = zeta(-a_);
}

Real SigmaSummatory::summatory(Real x) const {
    if (!(x >= 0.0L)) throw domain_error("SigmaSummatory: negative argument");
    const std::uint64_t X = floor_u64(x);
    if (X > limit_) throw range_error("SigmaSummatory: x beyond build limit");
    return prefix_[static_cast<std::size_t>(X)];
}

Real SigmaSummatory::smooth(Real x) const {
    return z1ma_ * x + z1pa_ / (1.0L + a_) * std::pow(x, 1.0L + a_) - zma_ / 2.0L;
}

Real SigmaSummatory::delta(Real x) const { return summatory(x) - smooth(x); }

TauSummatory::TauSummatory(std::uint64_t limit) : limit_(limit) {
    const FnTable tau = sieve(FnSpec{FnKind::tau}, limit, Backend::real);
    prefix_.assign(static_cast<std::size_t>(limit) + 1, 0);
    std::uint64_t acc = 0;
    for (std::uint64_t n = 1; n <= limit; ++n) {
        acc += static_cast<std::uint64_t>(tau.real(n) + 0.5L);
        prefix_[static_cast<std::size_t>(n)] = acc;
    }
}

Real TauSummatory::summatory(std::uint64_t n) const {
    if (n > limit_) throw range_error("TauSummatory: index beyond build limit");
    return (Real)prefix_[static_cast<std::size_t>(n)];
}

Real TauSummatory::delta(Real x) const {
    if (!(x >= 1.0L)) throw domain_error("TauSummatory: requires x >= 1");
    const std::uint64_t X = floor_u64(x);
    if (X > limit_) throw range_error("TauSummatory: x beyond build limit");
    return (Real)prefix_[static_cast<std::size_t>(X)] - x * std::log(x) -
           (2.0L * euler_gamma() - 1.0L) * x;
}

// ------------------------------------------------------------ ErrorTermLab

namespace {

// T_r(n)/n^{r+1} = 1/(r+1) + 1/(2n) + (1/(r+1)) sum_m binom(r+1,2m) B_{2m} n^{-2m}
Real t_norm(Real n, unsigned r) {
    Real v = 1.0L / (Real)(r + 1) + 0.5L / n;
    for (unsigned m = 1; 2 * m <= r; ++m)
        v += binom_real(r + 1, 2 * m) * to_real(bernoulli_even(m)) *
             std::pow(n, -2.0L * (Real)m) / (Real)(r + 1);
    return v;
}

FnTable h_table(HKind h, unsigned q, std::uint64_t limit) {
    FnSpec spec;
    switch (h) {
        case HKind::mu: spec.kind = FnKind::mu; break;
        case HKind::abs_mu: spec.kind = FnKind::abs_mu; break;
        case HKind::tau: spec.kind = FnKind::tau; break;
        case HKind::xi_q:
            spec.kind = FnKind::xi_q;
            spec.q = q;
            break;
    }
    return sieve(spec, limit, Backend::real);
}

}  // namespace

ErrorTermLab::ErrorTermLab(TheoremId id, const SumParams& p, std::uint64_t limit)
    : model_(main_term_model(id, p)), limit_(limit) {
    if (limit < 1) throw domain_error("ErrorTermLab: limit >= 1 required");
    Family fam = family_of(id);
    const SumParams& q = model_.params;
    if (fam.h_free) fam.h = to_weight(q.h);
    const unsigned r = q.r;
    const unsigned s = q.s;  // 1 for the plain families
    pw_ = s;
    const std::size_t n = static_cast<std::size_t>(limit);

    // (f*mu) = h * (id_{s(+a)} * mu), with the second factor sieved directly.
    const Real alpha = fam.fractional ? (Real)s + *q.a : (Real)s;
    FnTable core = sieve(FnSpec{FnKind::phi_alpha, alpha}, limit, Backend::real);
    FnTable g;
    if (fam.h == WeightH::unit)
        g = std::move(core);
    else
        g = dirichlet_convolve(h_table(q.h, q.q, limit), core);

    // remainder-formula weight (h*mu)(n): mu itself when h is the unit
    FnTable mu_t = sieve(FnSpec{FnKind::mu}, limit, Backend::real);
    FnTable w;
    if (fam.h == WeightH::unit)
        w = std::move(mu_t);
    else
        w = dirichlet_convolve(h_table(q.h, q.q, limit), mu_t);

    g_over_.assign(n + 1, 0.0L);
    w_over_.assign(n + 1, 0.0L);
    for (std::uint64_t d = 1; d <= limit; ++d) {
        const Real dp = std::pow((Real)d, -(Real)pw_);
        g_over_[static_cast<std::size_t>(d)] = g.real(d) * dp;
        w_over_[static_cast<std::size_t>(d)] = w.real(d) * dp;
    }

    tn_.assign(n + 1, 0.0L);
    wprefix_.assign(n + 1, 0.0L);
    CompensatedSum wp;
    for (std::uint64_t l = 1; l <= limit; ++l) {
        const Real arg = s == 1 ? (Real)l : std::pow((Real)l, (Real)s);
        tn_[static_cast<std::size_t>(l)] = t_norm(arg, r);
        wp.add(tn_[static_cast<std::size_t>(l)]);
        wprefix_[static_cast<std::size_t>(l)] = wp.value();
    }

    if (fam.fractional)
        sig_ = std::make_shared<SigmaSummatory>(*q.a, limit);
    else
        tau_ = std::make_shared<TauSummatory>(limit);

    // constant block and sawtooth weights, literal per family display
    theta_coeff_ = 0.0L;
    const_block_ = 0.0L;
    if (s >= 2) {
        const Real sb0 = bernoulli_zeta_block(r, s, 0.0L);
        const Real zs = zeta((Real)s);
        if (fam.fractional) {
            const Real za = zeta(-*q.a);
            const Real Hs = weight_series(fam.h, (Real)s, q.q);
            const_block_ = za * Hs / 2.0L + (za * Hs / ((Real)(r + 1) * zs)) * (sb0 - 0.5L);
        } else {
            FnTable theta_base = h_table(q.h, q.q, limit);
            theta_w_.assign(n + 1, 0.0L);
            for (std::uint64_t d = 1; d <= limit; ++d)
                theta_w_[static_cast<std::size_t>(d)] =
                    theta_base.real(d) * std::pow((Real)d, -(Real)s);
            switch (id) {
                case TheoremId::Th6_h:
                    theta_coeff_ = -1.0L;
                    const_block_ = -weight_series(fam.h, (Real)s, q.q) / 2.0L -
                                   weight_series(fam.h, (Real)s, q.q) /
                                       (2.0L * (Real)(r + 1) * zs) * sb0;
                    break;
                case TheoremId::Cor_phi_s:
                    theta_coeff_ = -0.5L;
                    const_block_ = -1.0L / (4.0L * zs) - sb0 / (2.0L * (Real)(r + 1) * zs * zs);
                    break;
                case TheoremId::Cor_psi_s:
                    theta_coeff_ = -0.5L;
                    const_block_ = -zs / (4.0L * zeta(2.0L * (Real)s)) -
                                   sb0 / (2.0L * (Real)(r + 1) * zeta(2.0L * (Real)s));
                    break;
                case TheoremId::Cor_tau:
                    theta_coeff_ = -1.0L;
                    const_block_ = -zs * zs / 2.0L - zs * sb0 / (2.0L * (Real)(r + 1));
                    break;
                default:
                    throw domain_error("ErrorTermLab: unhandled s-weighted family");
            }
        }
    }
}

Real ErrorTermLab::exact_value(Real x) const {
    if (!(x >= 1.0L)) throw domain_error("ErrorTermLab: requires x >= 1");
    const std::uint64_t X = floor_u64(x);
    if (X > limit_) throw range_error("ErrorTermLab: x beyond build limit");
    CompensatedSum acc;
    for (std::uint64_t d = 1; d <= X; ++d) {
        const Real gd = g_over_[static_cast<std::size_t>(d)];
        if (gd == 0.0L) continue;
        acc.add(gd * wprefix_[static_cast<std::size_t>(X / d)]);
    }
    return acc.value();
}

Real ErrorTermLab::k_formula(Real x) const {
    if (!(x >= 1.0L)) throw domain_error("ErrorTermLab: requires x >= 1");
    const std::uint64_t X = floor_u64(x);
    if (X > limit_) throw range_error("ErrorTermLab: x beyond build limit");
    CompensatedSum acc;
    for (std::uint64_t nn = 1; nn <= X; ++nn) {
        const Real wn = w_over_[static_cast<std::size_t>(nn)];
        if (wn == 0.0L) continue;
        const Real y = x / (Real)nn;
        acc.add(wn * (sig_ ? sig_->delta(y) : tau_->delta(y)));
    }
    Real value = acc.value() / (Real)(model_.params.r + 1) + const_block_;
    if (theta_coeff_ != 0.0L) {
        CompensatedSum th;
        for (std::uint64_t d = 1; d <= X; ++d) {
            const Real wd = theta_w_[static_cast<std::size_t>(d)];
            if (wd == 0.0L) continue;
            th.add(wd * (x / (Real)d - (Real)(X / d) - 0.5L));
        }
        value += theta_coeff_ * th.value();
    }
    return value;
}

ErrorSample ErrorTermLab::at(Real x) const {
    ErrorSample e;
    e.x = x;
    e.exact = exact_value(x);
    e.main = main_term(model_, x);
    e.K = e.exact - e.main;
    e.K_formula = k_formula(x);
    e.residual = std::fabs(e.K - e.K_formula);
    return e;
}

std::vector<ErrorSample> ErrorTermLab::sweep(const std::vector<Real>& xs) const {
    std::vector<ErrorSample> out(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) { out[i] = at(xs[i]); });
    return out;
}

std::vector<Real> ErrorTermLab::exact_steps() const {
    const std::size_t n = static_cast<std::size_t>(limit_);
    std::vector<Real> diff(n + 1, 0.0L);
    for (std::uint64_t d = 1; d <= limit_; ++d) {
        const Real gd = g_over_[static_cast<std::size_t>(d)];
        if (gd == 0.0L) continue;
        for (std::uint64_t l = 1, m = d; m <= limit_; ++l, m += d)
            diff[static_cast<std::size_t>(m)] += gd * tn_[static_cast<std::size_t>(l)];
    }
    std::vector<Real> steps(n + 1, 0.0L);
    CompensatedSum acc;
    for (std::size_t m = 1; m <= n; ++m) {
        acc.add(diff[m]);
        steps[m] = acc.value();
    }
    return steps;
}

ErrorSample error_term(TheoremId id, const SumParams& p, Real x) {
    if (!(x >= 1.0L)) throw domain_error("error_term: requires x >= 1");
    ErrorTermLab lab(id, p, floor_u64(x));
    return lab.at(x);
}

Real weighted_delta_sum(const FnTable& w, Real p, Real x, std::optional<Real> a) {
    if (!(x >= 1.0L)) throw domain_error("weighted_delta_sum: requires x >= 1");
    const std::uint64_t X = floor_u64(x);
    if (X > w.limit()) throw range_error("weighted_delta_sum: x beyond table limit");
    CompensatedSum acc;
    if (a) {
        SigmaSummatory sig(*a, X);
        for (std::uint64_t nn = 1; nn <= X; ++nn) {
            const Real wn = w.real(nn);
            if (wn == 0.0L) continue;
            acc.add(wn * std::pow((Real)nn, -p) * sig.delta(x / (Real)nn));
        }
    } else {
        TauSummatory tau(X);
        for (std::uint64_t nn = 1; nn <= X; ++nn) {
            const Real wn = w.real(nn);
            if (wn == 0.0L) continue;
            acc.add(wn * std::pow((Real)nn, -p) * tau.delta(x / (Real)nn));
        }
    }
    return acc.value();
}

std::vector<Real> sweep_grid(Real lo, Real hi) {
    if (!(lo >= 1.0L) || !(hi > lo)) throw domain_error("sweep_grid: need 1 <= lo < hi");
    std::vector<Real> pts;
    const int geo = 96;
    for (int i = 0; i <= geo; ++i)
        pts.push_back(lo * std::pow(hi / lo, (Real)i / (Real)geo));
    auto window = [&](Real center, int half) {
        const std::int64_t c = (std::int64_t)std::floor(center);
        for (std::int64_t k = c - half; k <= c + half; ++k) {
            if ((Real)k >= lo && (Real)k <= hi) pts.push_back((Real)k);
            const Real half_pt = (Real)k + 0.5L;
            if (half_pt >= lo && half_pt <= hi) pts.push_back(half_pt);
        }
    };
    window(lo + 2.0L, 16);
    window(hi / 10.0L, 10);
    window(hi, 20);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](Real u, Real v) { return std::fabs(u - v) <= 1e-9L * v; }),
              pts.end());
    return pts;
}

// ------------------------------------------------------------ lemma checks

LemmaId parse_lemma(const std::string& token) {
    if (token == "lem2-sigma1") return LemmaId::lem2_sigma1;
    if (token == "lem2-la") return LemmaId::lem2_la;
    if (token == "lem2-mu") return LemmaId::lem2_mu;
    if (token == "lem2-psi") return LemmaId::lem2_psi;
    if (token == "lem2-l2m") return LemmaId::lem2_l2m;
    if (token == "lem2-psi2m") return LemmaId::lem2_psi2m;
    throw config_error("unknown lemma selector '" + token + "'");
}

std::string lemma_token(LemmaId id) {
    switch (id) {
        case LemmaId::lem2_sigma1: return "lem2-sigma1";
        case LemmaId::lem2_la: return "lem2-la";
        case LemmaId::lem2_mu: return "lem2-mu";
        case LemmaId::lem2_psi: return "lem2-psi";
        case LemmaId::lem2_l2m: return "lem2-l2m";
        case LemmaId::lem2_psi2m: return "lem2-psi2m";
    }
    return "?";
}

LemmaCheck lemma_sum_check(LemmaId id, Real x, Real a, unsigned m) {
    RealExponent::open(a, -1.0L, 0.0L, "lemma_sum_check");
    if (!(x >= 1.0L)) throw domain_error("lemma_sum_check: requires x >= 1");
    const std::uint64_t X = floor_u64(x);
    const std::size_t n = static_cast<std::size_t>(X);
    const bool needs_m =
        id == LemmaId::lem2_la || id == LemmaId::lem2_l2m || id == LemmaId::lem2_psi2m;
    if (needs_m && m < 1) throw domain_error("lemma_sum_check: m >= 1 required");

    LemmaCheck out;
    const Real z2 = zeta(2.0L);
    const Real z2a = zeta(2.0L + a);

    switch (id) {
        case LemmaId::lem2_sigma1: {
            SigmaSummatory sig(a, X);
            const FnTable mu_t = sieve(FnSpec{FnKind::mu}, X, Backend::real);
            CompensatedSum exact, dsum;
            for (std::uint64_t d = 1; d <= X; ++d) {
                const Real w = mu_t.real(d) / (Real)d;
                if (w == 0.0L) continue;
                exact.add(w * sig.summatory(x / (Real)d));
                dsum.add(w * sig.delta(x / (Real)d));
            }
            out.exact = exact.value();
            out.predicted_main = zeta(1.0L - a) / z2 * x +
                                 zeta(1.0L + a) / ((1.0L + a) * z2a) * std::pow(x, 1.0L + a);
            out.residual = out.exact - out.predicted_main - dsum.value();
            return out;
        }
        case LemmaId::lem2_la: {
            // w = (mu/id) * id^{-2m}, then sum_{dl<=x} w(d) l^a
            std::vector<Real> w(n + 1, 0.0L);
            const FnTable mu_t = sieve(FnSpec{FnKind::mu}, X, Backend::real);
            for (std::uint64_t u = 1; u <= X; ++u) {
                const Real mu_u = mu_t.real(u);
                if (mu_u == 0.0L) continue;
                const Real wu = mu_u / (Real)u;
                for (std::uint64_t v = 1, uv = u; uv <= X; ++v, uv += u)
                    w[static_cast<std::size_t>(uv)] += wu * std::pow((Real)v, -2.0L * (Real)m);
            }
            std::vector<Real> pa(n + 1, 0.0L);
            CompensatedSum pacc;
            for (std::uint64_t l = 1; l <= X; ++l) {
                pacc.add(std::pow((Real)l, a));
                pa[static_cast<std::size_t>(l)] = pacc.value();
            }
            CompensatedSum exact;
            for (std::uint64_t d = 1; d <= X; ++d)
                exact.add(w[static_cast<std::size_t>(d)] * pa[static_cast<std::size_t>(X / d)]);
            out.exact = exact.value();
            out.predicted_main = zeta(2.0L * (Real)m + a + 1.0L) / ((1.0L + a) * z2a) *
                                 std::pow(x, 1.0L + a);
            out.residual = out.exact - out.predicted_main;
            return out;
        }
        case LemmaId::lem2_mu:
        case LemmaId::lem2_psi: {
            const bool psi = id == LemmaId::lem2_psi;
            const FnTable mu_t = sieve(FnSpec{FnKind::mu}, X, Backend::real);
            const FnTable f =
                psi ? sieve(FnSpec{FnKind::psi_beta, 1.0L + a}, X, Backend::real)
                    : sieve(FnSpec{FnKind::phi_alpha, 1.0L + a}, X, Backend::real);
            const FnTable g = dirichlet_convolve(f, mu_t);
            const FnTable w2 =
                psi ? dirichlet_convolve(sieve(FnSpec{FnKind::abs_mu}, X, Backend::real), mu_t)
                    : dirichlet_convolve(mu_t, mu_t);
            SigmaSummatory sig(a, X);
            CompensatedSum exact, dsum;
            for (std::uint64_t d = 1; d <= X; ++d) {
                const Real gd = g.real(d) / (Real)d;
                if (gd != 0.0L) exact.add(gd * (Real)(X / d));
                const Real wd = w2.real(d) / (Real)d;
                if (wd != 0.0L) dsum.add(wd * sig.delta(x / (Real)d));
            }
            out.exact = exact.value();
            const Real zb = psi ? zeta(4.0L) : z2 * z2;
            const Real zb_a = psi ? zeta(4.0L + 2.0L * a) : z2a * z2a;
            out.predicted_main = zeta(1.0L - a) / zb * x +
                                 zeta(1.0L + a) / ((1.0L + a) * zb_a) * std::pow(x, 1.0L + a);
            out.residual = out.exact - out.predicted_main - dsum.value();
            return out;
        }
        case LemmaId::lem2_l2m:
        case LemmaId::lem2_psi2m: {
            const bool psi = id == LemmaId::lem2_psi2m;
            const FnTable mu_t = sieve(FnSpec{FnKind::mu}, X, Backend::real);
            const FnTable f =
                psi ? sieve(FnSpec{FnKind::psi_beta, 1.0L + a}, X, Backend::real)
                    : sieve(FnSpec{FnKind::phi_alpha, 1.0L + a}, X, Backend::real);
            const FnTable g = dirichlet_convolve(f, mu_t);
            std::vector<Real> zp(n + 1, 0.0L);
            CompensatedSum zacc;
            for (std::uint64_t l = 1; l <= X; ++l) {
                zacc.add(std::pow((Real)l, -2.0L * (Real)m));
                zp[static_cast<std::size_t>(l)] = zacc.value();
            }
            CompensatedSum exact;
            for (std::uint64_t d = 1; d <= X; ++d) {
                const Real gd = g.real(d) / (Real)d;
                if (gd != 0.0L) exact.add(gd * zp[static_cast<std::size_t>(X / d)]);
            }
            out.exact = exact.value();
            const Real denom = psi ? zeta(4.0L + 2.0L * a) : z2a * z2a;
            out.predicted_main = zeta((Real)(2 * m) + a + 1.0L) / ((1.0L + a) * denom) *
                                 std::pow(x, 1.0L + a);
            out.residual = out.exact - out.predicted_main;
            return out;
        }
    }
    throw domain_error("lemma_sum_check: bad lemma id");
}

}  // namespace gcdsum
