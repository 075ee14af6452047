#include "core/gcd_sums.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "core/special_values.hpp"

namespace gcdsum {

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    if (n == 0) throw domain_error("factorize: zero");
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1u);
    return out;
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
    std::vector<std::uint64_t> divs{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = divs.size();
        std::uint64_t pe = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

int mobius_u64(std::uint64_t n) {
    int sign = 1;
    for (const auto& [p, e] : factorize(n)) {
        (void)p;
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

Rat power_sum(std::uint64_t n, unsigned r) {
    // T_r(n) = n^{r+1}/(r+1) + n^r/2
    //        + (1/(r+1)) sum_{m=1}^{[r/2]} binom(r+1, 2m) B_{2m} n^{r+1-2m}
    const Int N(static_cast<unsigned long>(n));
    Int npow;
    mpz_pow_ui(npow.get_mpz_t(), N.get_mpz_t(), r + 1);
    Rat acc = Rat(npow) / Rat(static_cast<long>(r + 1));
    if (r >= 1) {
        mpz_pow_ui(npow.get_mpz_t(), N.get_mpz_t(), r);
        acc += Rat(npow) / 2;
    } else {
        return Rat(N);  // r = 0: plain count
    }
    for (unsigned m = 1; 2 * m <= r; ++m) {
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), r + 1, 2 * m);
        mpz_pow_ui(npow.get_mpz_t(), N.get_mpz_t(), r + 1 - 2 * m);
        acc += Rat(binom) * bernoulli_even(m) * Rat(npow) / Rat(static_cast<long>(r + 1));
    }
    acc.canonicalize();
    return acc;
}

Rat coprime_power_sum(std::uint64_t q, unsigned r) {
    // sum_{m <= q, (m, q) = 1} m^r = sum_{e | rad(q)} mu(e) e^r T_r(q/e)
    Rat acc(0);
    std::vector<std::uint64_t> sf{1};
    for (const auto& [p, e] : factorize(q)) {
        (void)e;
        const std::size_t base = sf.size();
        for (std::size_t j = 0; j < base; ++j) sf.push_back(sf[j] * p);
    }
    for (std::uint64_t e : sf) {
        Int epow;
        Int E(static_cast<unsigned long>(e));
        mpz_pow_ui(epow.get_mpz_t(), E.get_mpz_t(), r);
        acc += Rat(mobius_u64(e)) * Rat(epow) * power_sum(q / e, r);
    }
    acc.canonicalize();
    return acc;
}

Rat pillai_weighted_direct(const FnTable& f, std::uint64_t k, unsigned r) {
    if (k < 1) throw domain_error("pillai_weighted: k >= 1 required");
    if (k > f.limit()) throw range_error("pillai_weighted: k beyond table limit");
    Rat acc(0);
    Int jpow;
    for (std::uint64_t j = 1; j <= k; ++j) {
        const Int J(static_cast<unsigned long>(j));
        mpz_pow_ui(jpow.get_mpz_t(), J.get_mpz_t(), r);
        acc += Rat(jpow) * f.rat(std::gcd(j, k));
    }
    acc.canonicalize();
    return acc;
}

Rat pillai_weighted(const FnTable& f, std::uint64_t k, unsigned r) {
    if (k < 1) throw domain_error("pillai_weighted: k >= 1 required");
    if (k > f.limit()) throw range_error("pillai_weighted: k beyond table limit");
    Rat acc(0);
    for (std::uint64_t d : divisors_of(k)) {
        const Rat& fd = f.rat(d);
        if (fd == 0) continue;
        Int dpow;
        Int D(static_cast<unsigned long>(d));
        mpz_pow_ui(dpow.get_mpz_t(), D.get_mpz_t(), r);
        acc += fd * Rat(dpow) * coprime_power_sum(k / d, r);
    }
    acc.canonicalize();
    return acc;
}

Real pillai_weighted_real(const FnTable& f, std::uint64_t k, unsigned r) {
    if (k < 1) throw domain_error("pillai_weighted: k >= 1 required");
    if (k > f.limit()) throw range_error("pillai_weighted: k beyond table limit");
    CompensatedSum acc;
    for (std::uint64_t j = 1; j <= k; ++j)
        acc.add(std::pow((Real)j, (Real)r) * f.real(std::gcd(j, k)));
    return acc.value();
}

ScalarValue m_r_exact(const FnTable& f, Real x, unsigned r) {
    if (r < 1) throw domain_error("m_r_exact: requires r >= 1");
    if (!(x >= 1.0L)) throw domain_error("m_r_exact: requires x >= 1");
    if (x > static_cast<Real>(f.limit())) throw range_error("m_r_exact: x beyond table limit");
    const std::uint64_t n = floor_u64(x);
    if (f.is_exact()) {
        Rat acc(0);
        for (std::uint64_t k = 1; k <= n; ++k) {
            Int kpow;
            Int K(static_cast<unsigned long>(k));
            mpz_pow_ui(kpow.get_mpz_t(), K.get_mpz_t(), r + 1);
            acc += pillai_weighted(f, k, r) / Rat(kpow);
        }
        return ScalarValue::from_rat(std::move(acc));
    }
    CompensatedSum acc;
    for (std::uint64_t k = 1; k <= n; ++k)
        acc.add(pillai_weighted_real(f, k, r) * std::pow((Real)k, -(Real)(r + 1)));
    return ScalarValue::from_real(acc.value());
}

namespace {

// Z_p(Q) = sum_{l <= Q} l^{-p}, rational prefix values for one exponent.
std::vector<Rat> inverse_power_prefix(std::uint64_t limit, unsigned p) {
    std::vector<Rat> z(static_cast<std::size_t>(limit) + 1, Rat(0));
    for (std::uint64_t l = 1; l <= limit; ++l) {
        Int lpow;
        Int L(static_cast<unsigned long>(l));
        mpz_pow_ui(lpow.get_mpz_t(), L.get_mpz_t(), p);
        Rat t(1);
        t /= Rat(lpow);
        z[static_cast<std::size_t>(l)] = z[static_cast<std::size_t>(l - 1)] + t;
    }
    return z;
}

ScalarValue identity_rhs_impl(const FnTable& f, const FnTable& f_mu, Real x, unsigned r,
                              unsigned s) {
    if (!(x >= 1.0L)) throw domain_error("identity rhs: requires x >= 1");
    if (x > static_cast<Real>(f.limit()) || x > static_cast<Real>(f_mu.limit()))
        throw range_error("identity rhs: x beyond table limit");
    const std::uint64_t n = floor_u64(x);

    if (f.is_exact() && f_mu.is_exact()) {
        Rat acc(0);
        Int dpow;
        for (std::uint64_t i = 1; i <= n; ++i) {
            Int I(static_cast<unsigned long>(i));
            mpz_pow_ui(dpow.get_mpz_t(), I.get_mpz_t(), s);
            acc += f.rat(i) / Rat(dpow) / 2;
        }
        Rat block(0);
        for (std::uint64_t d = 1; d <= n; ++d) {
            const Rat& g = f_mu.rat(d);
            if (g == 0) continue;
            Int D(static_cast<unsigned long>(d));
            mpz_pow_ui(dpow.get_mpz_t(), D.get_mpz_t(), s);
            block += g / Rat(dpow) * Rat(Int(static_cast<unsigned long>(n / d)));
        }
        acc += block / Rat(static_cast<long>(r + 1));
        for (unsigned m = 1; 2 * m <= r; ++m) {
            std::vector<Rat> z = inverse_power_prefix(n, 2 * m * s);
            Rat inner(0);
            for (std::uint64_t d = 1; d <= n; ++d) {
                const Rat& g = f_mu.rat(d);
                if (g == 0) continue;
                Int D(static_cast<unsigned long>(d));
                mpz_pow_ui(dpow.get_mpz_t(), D.get_mpz_t(), s);
                inner += g / Rat(dpow) * z[static_cast<std::size_t>(n / d)];
            }
            Int binom;
            mpz_bin_uiui(binom.get_mpz_t(), r + 1, 2 * m);
            acc += Rat(binom) * bernoulli_even(m) * inner / Rat(static_cast<long>(r + 1));
        }
        return ScalarValue::from_rat(std::move(acc));
    }

    // real path, same block structure with compensated sums
    CompensatedSum acc;
    for (std::uint64_t i = 1; i <= n; ++i)
        acc.add(0.5L * f.real(i) * std::pow((Real)i, -(Real)s));
    CompensatedSum block;
    for (std::uint64_t d = 1; d <= n; ++d) {
        const Real g = f_mu.real(d);
        if (g == 0.0L) continue;
        block.add(g * std::pow((Real)d, -(Real)s) * (Real)(n / d));
    }
    acc.add(block.value() / (Real)(r + 1));
    for (unsigned m = 1; 2 * m <= r; ++m) {
        std::vector<Real> z(static_cast<std::size_t>(n) + 1, 0.0L);
        for (std::uint64_t l = 1; l <= n; ++l)
            z[static_cast<std::size_t>(l)] =
                z[static_cast<std::size_t>(l - 1)] + std::pow((Real)l, -(Real)(2 * m * s));
        CompensatedSum inner;
        for (std::uint64_t d = 1; d <= n; ++d) {
            const Real g = f_mu.real(d);
            if (g == 0.0L) continue;
            inner.add(g * std::pow((Real)d, -(Real)s) * z[static_cast<std::size_t>(n / d)]);
        }
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), r + 1, 2 * m);
        acc.add(to_real(binom) * to_real(bernoulli_even(m)) * inner.value() / (Real)(r + 1));
    }
    return ScalarValue::from_real(acc.value());
}

}  // namespace

ScalarValue m_r_identity_rhs(const FnTable& f, const FnTable& f_mu, Real x, unsigned r) {
    if (r < 1) throw domain_error("m_r_identity_rhs: requires r >= 1");
    return identity_rhs_impl(f, f_mu, x, r, 1);
}

ScalarValue m_r_identity_rhs(const FnTable& f, Real x, unsigned r) {
    if (r < 1) throw domain_error("m_r_identity_rhs: requires r >= 1");
    const FnTable mu_t = sieve(FnSpec{FnKind::mu}, f.limit(),
                               f.is_exact() ? Backend::exact : Backend::real);
    const FnTable f_mu = dirichlet_convolve(f, mu_t);
    return identity_rhs_impl(f, f_mu, x, r, 1);
}

ScalarValue m_rs_identity_rhs(const FnTable& f, const FnTable& f_mu, Real x, unsigned r,
                              unsigned s) {
    if (r < 1) throw domain_error("m_rs_identity_rhs: requires r >= 1");
    if (s < 1) throw domain_error("m_rs_identity_rhs: requires s >= 1");
    return identity_rhs_impl(f, f_mu, x, r, s);
}

std::uint64_t generalized_gcd(std::uint64_t j, std::uint64_t k, unsigned s) {
    if (k < 1) throw domain_error("generalized_gcd: k >= 1 required");
    if (s < 1) throw domain_error("generalized_gcd: s >= 1 required");
    std::uint64_t best = 1;
    for (std::uint64_t d : divisors_of(k)) {
        if (j == 0) {
            best = d;  // d^s divides 0 for every d; divisors ascend
            continue;
        }
        // d^s > j means d^s cannot divide j (j >= 1)
        bool over = false;
        std::uint64_t ds = 1;
        for (unsigned i = 0; i < s; ++i) {
            if (ds > j / d) {
                over = true;
                break;
            }
            ds *= d;
        }
        if (over) continue;
        if (j % ds == 0) best = std::max(best, d);
    }
    return best;
}

long long ramanujan_sum(std::uint64_t k, std::uint64_t j) {
    if (k < 1) throw domain_error("ramanujan_sum: k >= 1 required");
    const std::uint64_t g = j == 0 ? k : std::gcd(j, k);
    long long acc = 0;
    for (std::uint64_t d : divisors_of(g))
        acc += static_cast<long long>(d) * mobius_u64(k / d);
    return acc;
}

long long cohen_sum(std::uint64_t k, std::uint64_t j, unsigned s) {
    if (k < 1) throw domain_error("cohen_sum: k >= 1 required");
    if (s < 1) throw domain_error("cohen_sum: s >= 1 required");
    long long acc = 0;
    for (std::uint64_t d : divisors_of(k)) {
        bool divides;
        std::uint64_t ds = 1;
        if (j == 0) {
            divides = true;
        } else {
            divides = true;
            for (unsigned i = 0; i < s; ++i) {
                if (ds > j / d) {
                    divides = false;
                    break;
                }
                ds *= d;
            }
            divides = divides && j % ds == 0;
        }
        if (!divides) continue;
        // d^s as long long; k, s stay small enough in practice that this fits
        long long dsll = 1;
        for (unsigned i = 0; i < s; ++i) dsll *= static_cast<long long>(d);
        acc += dsll * mobius_u64(k / d);
    }
    return acc;
}

ScalarValue anderson_apostol_sum(const FnTable& f, const FnTable& g, std::uint64_t k,
                                 std::uint64_t j, unsigned s) {
    if (k < 1) throw domain_error("anderson_apostol_sum: k >= 1 required");
    if (s < 1) throw domain_error("anderson_apostol_sum: s >= 1 required");
    if (k > f.limit() || k > g.limit())
        throw range_error("anderson_apostol_sum: k beyond table limit");
    const bool exact = f.is_exact() && g.is_exact();
    Rat acc_q(0);
    CompensatedSum acc_r;
    for (std::uint64_t d : divisors_of(k)) {
        bool divides = true;
        if (j != 0) {
            std::uint64_t ds = 1;
            for (unsigned i = 0; i < s; ++i) {
                if (ds > j / d) {
                    divides = false;
                    break;
                }
                ds *= d;
            }
            divides = divides && j % ds == 0;
        }
        if (!divides) continue;
        if (exact)
            acc_q += f.rat(d) * g.rat(k / d);
        else
            acc_r.add(f.real(d) * g.real(k / d));
    }
    if (exact) return ScalarValue::from_rat(std::move(acc_q));
    return ScalarValue::from_real(acc_r.value());
}

ScalarValue m_rs_exact(const FnTable& f, const FnTable& f_mu, Real x, unsigned r, unsigned s,
                       std::uint64_t budget) {
    if (r < 1) throw domain_error("m_rs_exact: requires r >= 1");
    if (s < 1) throw domain_error("m_rs_exact: requires s >= 1");
    if (!(x >= 1.0L)) throw domain_error("m_rs_exact: requires x >= 1");
    if (x > static_cast<Real>(f.limit()) || x > static_cast<Real>(f_mu.limit()))
        throw range_error("m_rs_exact: x beyond table limit");
    const std::uint64_t n = floor_u64(x);

    // budget pre-check: total inner iterations = sum_{k <= n} k^s
    std::uint64_t total = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
        std::uint64_t ks = 1;
        for (unsigned i = 0; i < s; ++i) {
            if (ks > budget / k) throw budget_error("m_rs_exact: iteration budget exceeded");
            ks *= k;
        }
        if (total > budget - ks) throw budget_error("m_rs_exact: iteration budget exceeded");
        total += ks;
    }

    const bool exact = f_mu.is_exact();
    Rat acc_q(0);
    CompensatedSum acc_r;
    Int jpow;
    for (std::uint64_t k = 1; k <= n; ++k) {
        std::uint64_t ks = 1;
        for (unsigned i = 0; i < s; ++i) ks *= k;
        const std::vector<std::uint64_t> divs = divisors_of(k);
        Rat inner_q(0);
        CompensatedSum inner_r;
        for (std::uint64_t j = 1; j <= ks; ++j) {
            // weight sum_{d | k, d^s | j} (f*mu)(d)
            Rat w_q(0);
            Real w_r = 0.0L;
            for (std::uint64_t d : divs) {
                std::uint64_t ds = 1;
                bool over = false;
                for (unsigned i = 0; i < s; ++i) {
                    if (ds > j / d) {
                        over = true;
                        break;
                    }
                    ds *= d;
                }
                if (over || j % ds != 0) continue;
                if (exact)
                    w_q += f_mu.rat(d);
                else
                    w_r += f_mu.real(d);
            }
            if (exact) {
                if (w_q == 0) continue;
                Int J(static_cast<unsigned long>(j));
                mpz_pow_ui(jpow.get_mpz_t(), J.get_mpz_t(), r);
                inner_q += Rat(jpow) * w_q;
            } else {
                if (w_r == 0.0L) continue;
                inner_r.add(std::pow((Real)j, (Real)r) * w_r);
            }
        }
        if (exact) {
            Int kpow;
            Int K(static_cast<unsigned long>(ks));
            mpz_pow_ui(kpow.get_mpz_t(), K.get_mpz_t(), r + 1);
            acc_q += inner_q / Rat(kpow);
        } else {
            acc_r.add(inner_r.value() * std::pow((Real)ks, -(Real)(r + 1)));
        }
    }
    if (exact) return ScalarValue::from_rat(std::move(acc_q));
    return ScalarValue::from_real(acc_r.value());
}

}  // namespace gcdsum
