#include "core/special_values.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <vector>

namespace gcdsum {

namespace {

void check_zeta_domain(Real sigma) {
    if (!std::isfinite((double)sigma)) throw domain_error("zeta: non-finite argument");
    if (sigma == 1.0L) throw domain_error("zeta: pole at sigma = 1");
    if (sigma <= -1.0L)
        throw domain_error("zeta: sigma <= -1 outside the supported half-plane");
}

void check_zeta_config(const ZetaConfig& cfg) {
    if (cfg.cut < 2 || cfg.cut > 100000)
        throw domain_error("zeta: direct-sum cut outside [2, 1e5]");
    if (cfg.terms < 1 || cfg.terms > 60)
        throw domain_error("zeta: correction term count outside [1, 60]");
}

}  // namespace

Rat bernoulli_even(unsigned m) {
    static std::mutex mu;
    static std::vector<Rat> all = {Rat(1)};  // all[n] = B_n, odd entries kept for the recurrence

    std::lock_guard<std::mutex> lock(mu);
    const unsigned want = 2 * m;
    while (all.size() <= want) {
        // sum_{k=0}^{n} C(n+1, k) B_k = 0 for n >= 1, solved for B_n.
        const unsigned n = static_cast<unsigned>(all.size());
        Rat acc(0);
        Int binom(1);  // C(n+1, k), updated incrementally
        for (unsigned k = 0; k < n; ++k) {
            acc += Rat(binom) * all[k];
            binom *= static_cast<long>(n + 1 - k);
            binom /= static_cast<long>(k + 1);
        }
        // binom now equals C(n+1, n) = n+1
        Rat bn = -acc / Rat(binom);
        bn.canonicalize();
        all.push_back(bn);
    }
    return all[want];
}

Real zeta(Real sigma, const ZetaConfig& cfg) {
    check_zeta_domain(sigma);
    check_zeta_config(cfg);

    const unsigned N = cfg.cut;
    CompensatedSum direct;
    for (unsigned n = 1; n <= N; ++n) direct.add(std::pow((Real)n, -sigma));

    const Real Npow = std::pow((Real)N, -sigma);  // N^{-sigma}
    Real value = direct.value() + (Real)N * Npow / (sigma - 1.0L) - 0.5L * Npow;

    // Correction terms B_{2k}/(2k)! * sigma (sigma+1) ... (sigma+2k-2) * N^{-sigma-2k+1}
    Real rising = sigma;              // sigma (sigma+1) ... , grown two factors per k
    Real npow = Npow * (Real)N;       // N^{-sigma-2k+1}, starts at N^{1-sigma}
    Real factorial = 1.0L;            // (2k)!
    CompensatedSum corr;
    for (unsigned k = 1; k <= cfg.terms; ++k) {
        factorial *= (Real)(2 * k - 1) * (Real)(2 * k);
        npow /= (Real)N * (Real)N;
        const Real b2k = to_real(bernoulli_even(k));
        corr.add(b2k / factorial * rising * npow);
        rising *= (sigma + (Real)(2 * k - 1)) * (sigma + (Real)(2 * k));
    }
    return value + corr.value();
}

Real zeta(Real sigma) { return zeta(sigma, ZetaConfig{}); }

Real zeta_prime(Real sigma, const ZetaConfig& cfg) {
    if (!(sigma > 1.0L)) throw domain_error("zeta_prime: requires sigma > 1");
    check_zeta_config(cfg);

    const unsigned N = cfg.cut;
    const Real logN = std::log((Real)N);
    CompensatedSum direct;
    for (unsigned n = 2; n <= N; ++n)
        direct.add(-std::log((Real)n) * std::pow((Real)n, -sigma));

    const Real Npow = std::pow((Real)N, -sigma);
    // d/ds [ N^{1-s}/(s-1) ] = -N^{1-s} logN/(s-1) - N^{1-s}/(s-1)^2
    Real value = direct.value();
    value += -(Real)N * Npow * logN / (sigma - 1.0L) - (Real)N * Npow / ((sigma - 1.0L) * (sigma - 1.0L));
    value += 0.5L * Npow * logN;  // d/ds [ -N^{-s}/2 ]

    // Each correction term is c_k * P_k(s) * N^{-s-2k+1} with
    // P_k(s) = s(s+1)...(s+2k-2); differentiate by the product rule.
    Real rising = sigma;
    Real npow = Npow * (Real)N;
    Real factorial = 1.0L;
    Real harmonic = 1.0L / sigma;  // sum_{i=0}^{2k-2} 1/(sigma+i)
    CompensatedSum corr;
    for (unsigned k = 1; k <= cfg.terms; ++k) {
        factorial *= (Real)(2 * k - 1) * (Real)(2 * k);
        npow /= (Real)N * (Real)N;
        const Real b2k = to_real(bernoulli_even(k));
        corr.add(b2k / factorial * rising * npow * (harmonic - logN));
        harmonic += 1.0L / (sigma + (Real)(2 * k - 1)) + 1.0L / (sigma + (Real)(2 * k));
        rising *= (sigma + (Real)(2 * k - 1)) * (sigma + (Real)(2 * k));
    }
    return value + corr.value();
}

Real zeta_prime(Real sigma) { return zeta_prime(sigma, ZetaConfig{}); }

namespace {

// gamma = H_N - log N - 1/(2N) + sum_k B_{2k} / (2k N^{2k}), truncated where
// the terms bottom out. Slower than the literal below but independent of it.
Real gamma_by_harmonic() {
    const unsigned N = 50;
    CompensatedSum h;
    for (unsigned n = 1; n <= N; ++n) h.add(1.0L / (Real)n);
    Real g = h.value() - std::log((Real)N) - 0.5L / (Real)N;
    Real npow = 1.0L;
    for (unsigned k = 1; k <= 10; ++k) {
        npow /= (Real)N * (Real)N;
        g += to_real(bernoulli_even(k)) / (Real)(2 * k) * npow;
    }
    return g;
}

}  // namespace

Real euler_gamma() {
    static const Real value = [] {
        const Real literal = 0.57721566490153286060651209008240243104L;
        const Real recomputed = gamma_by_harmonic();
        if (std::fabs(literal - recomputed) > 1e-15L) {
            std::fprintf(stderr,
                         "euler_gamma: stored constant disagrees with harmonic evaluation "
                         "(%.21Lg vs %.21Lg)\n",
                         literal, recomputed);
            std::abort();
        }
        return literal;
    }();
    return value;
}

Real delta_decay(Real x, Real C) {
    if (!(x > std::exp(1.0L)))
        throw domain_error("delta_decay: requires x > e");
    if (!(C > 0.0L) || !std::isfinite((double)C))
        throw domain_error("delta_decay: requires C > 0");
    const Real lx = std::log(x);
    return std::exp(-C * std::pow(lx, 0.6L) * std::pow(std::log(lx), -0.2L));
}

}  // namespace gcdsum
