#include "core/fn_table.hpp"

#include <cmath>
#include <cstdio>

#include "core/special_values.hpp"

namespace gcdsum {

// ------------------------------------------------------------------ FnSpec

namespace {

struct KindName {
    const char* name;
    FnKind kind;
    bool takes_param;
};

constexpr KindName kKinds[] = {
    {"mu", FnKind::mu, false},           {"abs_mu", FnKind::abs_mu, false},
    {"one", FnKind::one, false},         {"id", FnKind::id, false},
    {"id_a", FnKind::id_a, true},        {"tau", FnKind::tau, false},
    {"sigma_a", FnKind::sigma_a, true},  {"phi", FnKind::phi, false},
    {"psi", FnKind::psi, false},         {"phi_alpha", FnKind::phi_alpha, true},
    {"psi_beta", FnKind::psi_beta, true},{"xi_q", FnKind::xi_q, true},
};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    std::size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

Real parse_real(const std::string& text, const char* what) {
    const std::string t = trim(text);
    char* end = nullptr;
    const Real v = strtold(t.c_str(), &end);
    if (end != t.c_str() + t.size() || t.empty() || !std::isfinite((double)v))
        throw domain_error(std::string(what) + ": bad numeric parameter '" + text + "'");
    return v;
}

std::string format_real_short(Real v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17Lg", v);
    return buf;
}

}  // namespace

FnSpec FnSpec::parse(const std::string& text) {
    const std::string t = trim(text);
    std::string name = t;
    std::string param;
    const std::size_t open = t.find('(');
    if (open != std::string::npos) {
        if (t.back() != ')')
            throw domain_error("function selector '" + text + "': unbalanced parentheses");
        name = trim(t.substr(0, open));
        param = trim(t.substr(open + 1, t.size() - open - 2));
        // allow the label form "sigma_a(a=-0.3)"
        const std::size_t eq = param.find('=');
        if (eq != std::string::npos) param = trim(param.substr(eq + 1));
    }
    for (const auto& k : kKinds) {
        if (name != k.name) continue;
        FnSpec spec;
        spec.kind = k.kind;
        if (k.takes_param != !param.empty())
            throw domain_error("function selector '" + text + "': " +
                               (k.takes_param ? "missing parameter" : "unexpected parameter"));
        if (k.takes_param) {
            if (spec.kind == FnKind::xi_q) {
                const Real v = parse_real(param, "xi_q");
                if (v < 2.0L || v != std::rint(v) || v > 64.0L)
                    throw domain_error("xi_q: q must be an integer >= 2");
                spec.q = static_cast<unsigned>(v);
            } else {
                spec.exponent = parse_real(param, k.name);
            }
        }
        return spec;
    }
    throw domain_error("unknown function selector '" + text + "'");
}

bool FnSpec::parametrized() const {
    switch (kind) {
        case FnKind::id_a:
        case FnKind::sigma_a:
        case FnKind::phi_alpha:
        case FnKind::psi_beta:
        case FnKind::xi_q:
            return true;
        default:
            return false;
    }
}

bool FnSpec::integer_exponent() const {
    return std::rint(exponent) == exponent && std::fabs(exponent) <= 64.0L;
}

bool FnSpec::exact_capable() const {
    switch (kind) {
        case FnKind::id_a:
        case FnKind::sigma_a:
        case FnKind::phi_alpha:
        case FnKind::psi_beta:
            return integer_exponent();
        default:
            return true;
    }
}

std::string FnSpec::label() const {
    switch (kind) {
        case FnKind::mu: return "mu";
        case FnKind::abs_mu: return "abs_mu";
        case FnKind::one: return "one";
        case FnKind::id: return "id";
        case FnKind::tau: return "tau";
        case FnKind::phi: return "phi";
        case FnKind::psi: return "psi";
        case FnKind::id_a: return "id_a(a=" + format_real_short(exponent) + ")";
        case FnKind::sigma_a: return "sigma_a(a=" + format_real_short(exponent) + ")";
        case FnKind::phi_alpha: return "phi_alpha(alpha=" + format_real_short(exponent) + ")";
        case FnKind::psi_beta: return "psi_beta(beta=" + format_real_short(exponent) + ")";
        case FnKind::xi_q: return "xi_q(q=" + std::to_string(q) + ")";
    }
    return "?";
}

// ------------------------------------------------------------------ FnTable

const Rat& FnTable::rat(std::uint64_t n) const {
    if (!is_exact())
        throw backend_error("FnTable::rat: table '" + label_ + "' is on the real backend");
    if (n < 1 || n > limit_)
        throw range_error("FnTable::rat: index outside 1..limit");
    return exact_[static_cast<std::size_t>(n)];
}

Real FnTable::real(std::uint64_t n) const {
    if (n < 1 || n > limit_)
        throw range_error("FnTable::real: index outside 1..limit");
    if (is_exact()) return to_real(exact_[static_cast<std::size_t>(n)]);
    return real_[static_cast<std::size_t>(n)];
}

FnTable FnTable::make_exact(std::vector<Rat> values, std::string label) {
    FnTable t;
    t.backend_ = Backend::exact;
    t.limit_ = values.empty() ? 0 : values.size() - 1;
    t.exact_ = std::move(values);
    t.label_ = std::move(label);
    return t;
}

FnTable FnTable::make_real(std::vector<Real> values, std::string label) {
    FnTable t;
    t.backend_ = Backend::real;
    t.limit_ = values.empty() ? 0 : values.size() - 1;
    t.real_ = std::move(values);
    t.label_ = std::move(label);
    return t;
}

// -------------------------------------------------------------------- sieve

namespace {

struct Factored {
    std::vector<std::uint32_t> spf;   // smallest prime factor, spf[1] = 1
    std::vector<std::uint32_t> head;  // spf[n]^e part of n
    std::vector<std::uint8_t> expo;   // its exponent
};

Factored linear_sieve(std::uint64_t limit) {
    if (limit < 1) throw domain_error("sieve: limit must be >= 1");
    if (limit > 200'000'000ull) throw range_error("sieve: limit above 2e8 not supported");
    const std::size_t n = static_cast<std::size_t>(limit);
    Factored f;
    f.spf.assign(n + 1, 0);
    f.head.assign(n + 1, 1);
    f.expo.assign(n + 1, 0);
    std::vector<std::uint32_t> primes;
    for (std::size_t i = 2; i <= n; ++i) {
        if (f.spf[i] == 0) {
            f.spf[i] = static_cast<std::uint32_t>(i);
            primes.push_back(static_cast<std::uint32_t>(i));
        }
        for (std::uint32_t p : primes) {
            if (p > f.spf[i]) break;
            const std::uint64_t m = static_cast<std::uint64_t>(p) * i;
            if (m > limit) break;
            f.spf[static_cast<std::size_t>(m)] = p;
        }
    }
    f.spf[1] = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        const std::uint32_t p = f.spf[i];
        const std::size_t rest = i / p;
        if (rest > 1 && f.spf[rest] == p) {
            f.expo[i] = static_cast<std::uint8_t>(f.expo[rest] + 1);
            f.head[i] = f.head[rest] * p;
        } else {
            f.expo[i] = 1;
            f.head[i] = p;
        }
    }
    return f;
}

Rat rat_pow_int(std::uint64_t base, long e) {
    Int b(static_cast<unsigned long>(base));
    Int num;
    mpz_pow_ui(num.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rat(num);
    Rat r(1, num);
    r.canonicalize();
    return r;
}

Rat prime_power_exact(const FnSpec& spec, std::uint64_t p, unsigned e) {
    const long a = static_cast<long>(std::rint(spec.exponent));
    switch (spec.kind) {
        case FnKind::mu: return Rat(e == 1 ? -1 : 0);
        case FnKind::abs_mu: return Rat(e == 1 ? 1 : 0);
        case FnKind::one: return Rat(1);
        case FnKind::id: return rat_pow_int(p, static_cast<long>(e));
        case FnKind::tau: return Rat(static_cast<long>(e + 1));
        case FnKind::phi: return rat_pow_int(p, static_cast<long>(e)) - rat_pow_int(p, static_cast<long>(e) - 1);
        case FnKind::psi: return rat_pow_int(p, static_cast<long>(e)) + rat_pow_int(p, static_cast<long>(e) - 1);
        case FnKind::id_a: return rat_pow_int(p, a * static_cast<long>(e));
        case FnKind::sigma_a: {
            Rat acc(0);
            for (unsigned i = 0; i <= e; ++i) acc += rat_pow_int(p, a * static_cast<long>(i));
            return acc;
        }
        case FnKind::phi_alpha:
            return rat_pow_int(p, a * static_cast<long>(e)) - rat_pow_int(p, a * (static_cast<long>(e) - 1));
        case FnKind::psi_beta:
            return rat_pow_int(p, a * static_cast<long>(e)) + rat_pow_int(p, a * (static_cast<long>(e) - 1));
        case FnKind::xi_q: return Rat(e < spec.q ? 1 : 0);
    }
    throw domain_error("sieve: unhandled kind");
}

Real prime_power_real(const FnSpec& spec, std::uint64_t p, unsigned e) {
    const Real pr = static_cast<Real>(p);
    const Real a = spec.exponent;
    switch (spec.kind) {
        case FnKind::mu: return e == 1 ? -1.0L : 0.0L;
        case FnKind::abs_mu: return e == 1 ? 1.0L : 0.0L;
        case FnKind::one: return 1.0L;
        case FnKind::id: return std::pow(pr, (Real)e);
        case FnKind::tau: return (Real)(e + 1);
        case FnKind::phi: return std::pow(pr, (Real)e) - std::pow(pr, (Real)e - 1.0L);
        case FnKind::psi: return std::pow(pr, (Real)e) + std::pow(pr, (Real)e - 1.0L);
        case FnKind::id_a: return std::pow(pr, a * (Real)e);
        case FnKind::sigma_a: {
            const Real pa = std::pow(pr, a);
            Real acc = 1.0L, term = 1.0L;
            for (unsigned i = 1; i <= e; ++i) {
                term *= pa;
                acc += term;
            }
            return acc;
        }
        case FnKind::phi_alpha: return std::pow(pr, a * (Real)e) - std::pow(pr, a * ((Real)e - 1.0L));
        case FnKind::psi_beta: return std::pow(pr, a * (Real)e) + std::pow(pr, a * ((Real)e - 1.0L));
        case FnKind::xi_q: return e < spec.q ? 1.0L : 0.0L;
    }
    throw domain_error("sieve: unhandled kind");
}

}  // namespace

FnTable sieve(const FnSpec& spec, std::uint64_t limit, Backend backend) {
    if (backend == Backend::exact && !spec.exact_capable())
        throw backend_error("sieve: '" + spec.label() + "' has no exact table (non-integer exponent)");
    const Factored fac = linear_sieve(limit);
    const std::size_t n = static_cast<std::size_t>(limit);

    if (backend == Backend::exact) {
        std::vector<Rat> v(n + 1, Rat(0));
        v[0] = 0;
        if (n >= 1) v[1] = 1;
        for (std::size_t i = 2; i <= n; ++i) {
            const std::size_t rest = i / fac.head[i];
            v[i] = v[rest] * prime_power_exact(spec, fac.spf[i], fac.expo[i]);
        }
        return FnTable::make_exact(std::move(v), spec.label());
    }
    std::vector<Real> v(n + 1, 0.0L);
    if (n >= 1) v[1] = 1.0L;
    for (std::size_t i = 2; i <= n; ++i) {
        const std::size_t rest = i / fac.head[i];
        v[i] = v[rest] * prime_power_real(spec, fac.spf[i], fac.expo[i]);
    }
    return FnTable::make_real(std::move(v), spec.label());
}

FnTable sieve(const FnSpec& spec, std::uint64_t limit) {
    return sieve(spec, limit, spec.exact_capable() ? Backend::exact : Backend::real);
}

FnTable dirichlet_convolve(const FnTable& f, const FnTable& g) {
    if (f.limit() == 0 || g.limit() == 0)
        throw domain_error("dirichlet_convolve: empty table");
    const std::uint64_t n = std::min(f.limit(), g.limit());
    const std::string label = "(" + f.label() + "*" + g.label() + ")";
    if (f.is_exact() && g.is_exact()) {
        std::vector<Rat> h(static_cast<std::size_t>(n) + 1, Rat(0));
        for (std::uint64_t d = 1; d <= n; ++d) {
            const Rat& fd = f.rat(d);
            if (fd == 0) continue;
            for (std::uint64_t l = 1, m = d; m <= n; ++l, m += d)
                h[static_cast<std::size_t>(m)] += fd * g.rat(l);
        }
        return FnTable::make_exact(std::move(h), label);
    }
    std::vector<Real> h(static_cast<std::size_t>(n) + 1, 0.0L);
    for (std::uint64_t d = 1; d <= n; ++d) {
        const Real fd = f.real(d);
        if (fd == 0.0L) continue;
        for (std::uint64_t l = 1, m = d; m <= n; ++l, m += d)
            h[static_cast<std::size_t>(m)] += fd * g.real(l);
    }
    return FnTable::make_real(std::move(h), label);
}

// -------------------------------------------------------------- ScalarValue

ScalarValue ScalarValue::from_rat(Rat q) {
    ScalarValue v;
    v.backend = Backend::exact;
    v.exact = std::move(q);
    v.exact.canonicalize();
    v.approx = to_real(v.exact);
    return v;
}

ScalarValue ScalarValue::from_real(Real r) {
    ScalarValue v;
    v.backend = Backend::real;
    v.approx = r;
    return v;
}

std::string ScalarValue::str() const {
    if (backend == Backend::exact) return rat_to_string(exact);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17Lg", approx);
    return buf;
}

ScalarValue partial_sum(const FnTable& f, Real x) {
    if (!(x >= 1.0L)) throw domain_error("partial_sum: requires x >= 1");
    const std::uint64_t n = floor_u64(x);
    if (n > f.limit()) throw range_error("partial_sum: x beyond table limit");
    if (f.is_exact()) {
        Rat acc(0);
        for (std::uint64_t i = 1; i <= n; ++i) acc += f.rat(i);
        return ScalarValue::from_rat(std::move(acc));
    }
    CompensatedSum acc;
    for (std::uint64_t i = 1; i <= n; ++i) acc.add(f.real(i));
    return ScalarValue::from_real(acc.value());
}

// ------------------------------------------------- power sums and hyperbola

std::uint64_t isqrt_u64(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<Real>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

Real partial_power_sum(Real y, Real a) {
    if (!(a > -1.0L) || !(a < 1.0L))
        throw domain_error("partial_power_sum: exponent outside (-1, 1)");
    if (!(y >= 0.0L)) throw domain_error("partial_power_sum: negative argument");
    const std::uint64_t n = floor_u64(y);
    if (n == 0) return 0.0L;

    constexpr std::uint64_t kDirectCut = 64;
    if (n <= kDirectCut) {
        CompensatedSum acc;
        for (std::uint64_t i = 1; i <= n; ++i) acc.add(std::pow((Real)i, a));
        return acc.value();
    }
    // Euler-Maclaurin around the tail:
    //   sum_{i<=n} i^a = zeta(-a) + n^{1+a}/(1+a) + n^a/2
    //                  + sum_k B_{2k}/(2k)! * a(a-1)...(a-2k+2) * n^{a-2k+1}
    const Real npow_a = std::pow((Real)n, a);
    Real value = zeta(-a) + (Real)n * npow_a / (1.0L + a) + 0.5L * npow_a;
    Real falling = a;
    Real npow = npow_a / (Real)n;  // n^{a-2k+1}
    Real factorial = 1.0L;
    for (unsigned k = 1; k <= 10; ++k) {
        factorial *= (Real)(2 * k - 1) * (Real)(2 * k);
        value += to_real(bernoulli_even(k)) / factorial * falling * npow;
        npow /= (Real)n * (Real)n;
        falling *= (a - (Real)(2 * k - 1)) * (a - (Real)(2 * k));
    }
    return value;
}

Real summatory_sigma_a(Real x, Real a) {
    RealExponent::open(a, -1.0L, 0.0L, "summatory_sigma_a");
    if (!(x >= 1.0L)) throw domain_error("summatory_sigma_a: requires x >= 1");
    const std::uint64_t X = floor_u64(x);
    const std::uint64_t U = isqrt_u64(X);

    // sum_{db <= X} d^a  =  sum_{d <= U} d^a [X/d]  +  sum_{b <= U} P_a(X/b)
    //                      - U * P_a(U)
    CompensatedSum acc;
    for (std::uint64_t d = 1; d <= U; ++d)
        acc.add(std::pow((Real)d, a) * (Real)(X / d));
    for (std::uint64_t b = 1; b <= U; ++b)
        acc.add(partial_power_sum((Real)(X / b), a));
    acc.add(-(Real)U * partial_power_sum((Real)U, a));
    return acc.value();
}

std::uint64_t summatory_tau(std::uint64_t x) {
    const std::uint64_t U = isqrt_u64(x);
    std::uint64_t s = 0;
    for (std::uint64_t d = 1; d <= U; ++d) s += x / d;
    return 2 * s - U * U;
}

}  // namespace gcdsum
