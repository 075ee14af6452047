#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "core/errors.hpp"
#include "core/fn_table.hpp"
#include "core/numeric.hpp"
#include "core/special_values.hpp"

using namespace gcdsum;

namespace {

bool tables_equal_exact(const FnTable& f, const FnTable& g) {
    if (f.limit() != g.limit()) return false;
    for (std::uint64_t n = 1; n <= f.limit(); ++n)
        if (f.rat(n) != g.rat(n)) return false;
    return true;
}

FnTable random_exact_table(std::uint64_t limit, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<Rat> v(static_cast<std::size_t>(limit) + 1, Rat(0));
    for (std::uint64_t n = 1; n <= limit; ++n)
        v[static_cast<std::size_t>(n)] = Rat(static_cast<long>(gen() % 41) - 20);
    return FnTable::make_exact(std::move(v), "rand");
}

}  // namespace

TEST_CASE("sieve produces the catalog's small values") {
    const FnTable mu = sieve(FnSpec::parse("mu"), 6);
    const long expected_mu[] = {0, 1, -1, -1, 0, -1, 1};
    for (std::uint64_t n = 1; n <= 6; ++n) CHECK(mu.rat(n) == Rat(expected_mu[n]));

    const FnTable one = sieve(FnSpec::parse("one"), 4);
    for (std::uint64_t n = 1; n <= 4; ++n) CHECK(one.rat(n) == 1);

    const FnTable psi = sieve(FnSpec::parse("psi"), 6);
    CHECK(psi.rat(6) == 12);

    const FnTable sig = sieve(FnSpec::parse("sigma_a(-0.5)"), 4);
    CHECK(std::fabs(sig.real(4) - (1.0L + std::pow(2.0L, -0.5L) + 0.5L)) < 1e-15L);
    CHECK(std::fabs(sig.real(4) - 2.207107L) < 1e-6L);

    const FnTable j2 = sieve(FnSpec::parse("phi_alpha(2)"), 6);
    CHECK(j2.rat(6) == 24);  // 36 (1 - 1/4)(1 - 1/9)

    const FnTable xi3 = sieve(FnSpec::parse("xi_q(3)"), 16);
    CHECK(xi3.rat(8) == 0);
    CHECK(xi3.rat(12) == 1);
    CHECK(xi3.rat(16) == 0);
}

TEST_CASE("selector parsing and labels") {
    CHECK(FnSpec::parse("mu").label() == "mu");
    CHECK(FnSpec::parse("sigma_a(a=-0.3)").label() == "sigma_a(a=-0.3)");
    CHECK(FnSpec::parse("sigma_a(-0.3)").label() == "sigma_a(a=-0.3)");
    CHECK(FnSpec::parse("xi_q(q=4)").label() == "xi_q(q=4)");
    CHECK_THROWS_AS(FnSpec::parse("sigmoid"), domain_error);
    CHECK_THROWS_AS(FnSpec::parse("sigma_a"), domain_error);
    CHECK(FnSpec::parse("id_a(3)").exact_capable());
    CHECK(!FnSpec::parse("id_a(-0.5)").exact_capable());
}

TEST_CASE("backend rules") {
    CHECK_THROWS_AS(sieve(FnSpec::parse("mu"), 0), domain_error);
    CHECK_THROWS_AS(sieve(FnSpec::parse("sigma_a(-0.5)"), 10, Backend::exact),
                    backend_error);
    const FnTable sig = sieve(FnSpec::parse("sigma_a(-0.5)"), 10);
    CHECK(!sig.is_exact());
    CHECK(sig.mantissa_bits() >= 64);
    CHECK_THROWS_AS(sig.rat(3), backend_error);
    const FnTable mu = sieve(FnSpec::parse("mu"), 10);
    CHECK(mu.is_exact());
    // exact tables also answer real queries by conversion
    CHECK(mu.real(2) == -1.0L);
}

TEST_CASE("dirichlet convolution identities at small n") {
    const FnTable e = dirichlet_convolve(sieve(FnSpec::parse("mu"), 12),
                                         sieve(FnSpec::parse("one"), 12));
    CHECK(e.rat(1) == 1);
    for (std::uint64_t n = 2; n <= 12; ++n) CHECK(e.rat(n) == 0);

    const FnTable phi6 = dirichlet_convolve(sieve(FnSpec::parse("id"), 6),
                                            sieve(FnSpec::parse("mu"), 6));
    CHECK(phi6.rat(6) == 2);

    const FnTable psi6 = dirichlet_convolve(sieve(FnSpec::parse("id"), 6),
                                            sieve(FnSpec::parse("abs_mu"), 6));
    CHECK(psi6.rat(6) == 12);

    // mismatched limits truncate to the shorter table
    const FnTable trunc = dirichlet_convolve(sieve(FnSpec::parse("id"), 6),
                                             sieve(FnSpec::parse("mu"), 9));
    CHECK(trunc.limit() == 6);
}

TEST_CASE("catalog functions equal their defining convolutions") {
    const std::uint64_t N = 10000;
    const FnTable mu = sieve(FnSpec::parse("mu"), N);
    const FnTable abs_mu = sieve(FnSpec::parse("abs_mu"), N);
    const FnTable one = sieve(FnSpec::parse("one"), N);
    const FnTable id = sieve(FnSpec::parse("id"), N);

    CHECK(tables_equal_exact(sieve(FnSpec::parse("phi"), N), dirichlet_convolve(id, mu)));
    CHECK(tables_equal_exact(sieve(FnSpec::parse("psi"), N),
                             dirichlet_convolve(id, abs_mu)));
    CHECK(tables_equal_exact(sieve(FnSpec::parse("tau"), N), dirichlet_convolve(one, one)));
    CHECK(tables_equal_exact(sieve(FnSpec::parse("phi_alpha(2)"), N),
                             dirichlet_convolve(sieve(FnSpec::parse("id_a(2)"), N), mu)));
    CHECK(tables_equal_exact(sieve(FnSpec::parse("psi_beta(2)"), N),
                             dirichlet_convolve(sieve(FnSpec::parse("id_a(2)"), N), abs_mu)));
    // xi_2 is the squarefree indicator
    CHECK(tables_equal_exact(sieve(FnSpec::parse("xi_q(2)"), N), abs_mu));

    const FnTable sig = sieve(FnSpec::parse("sigma_a(-0.4)"), N);
    const FnTable sig_conv =
        dirichlet_convolve(sieve(FnSpec::parse("id_a(-0.4)"), N), one);
    for (std::uint64_t n = 1; n <= N; ++n) {
        if (std::fabs(sig.real(n) - sig_conv.real(n)) > 1e-14L * sig.real(n)) {
            CAPTURE(n);
            CHECK(std::fabs(sig.real(n) - sig_conv.real(n)) <= 1e-14L * sig.real(n));
        }
    }
}

TEST_CASE("mobius inversion round trip on random tables") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const std::uint64_t N = 500 + 500 * seed;
        const FnTable f = random_exact_table(N, seed);
        const FnTable back = dirichlet_convolve(
            dirichlet_convolve(f, sieve(FnSpec::parse("mu"), N)),
            sieve(FnSpec::parse("one"), N));
        CHECK(tables_equal_exact(f, back));
    }
}

TEST_CASE("convolution is commutative and associative") {
    const std::uint64_t N = 512;
    const FnTable f = random_exact_table(N, 11);
    const FnTable g = random_exact_table(N, 22);
    const FnTable h = random_exact_table(N, 33);
    CHECK(tables_equal_exact(dirichlet_convolve(f, g), dirichlet_convolve(g, f)));
    CHECK(tables_equal_exact(dirichlet_convolve(dirichlet_convolve(f, g), h),
                             dirichlet_convolve(f, dirichlet_convolve(g, h))));
}

TEST_CASE("partial sums") {
    CHECK(partial_sum(sieve(FnSpec::parse("mu"), 10), 10.0L).exact == Rat(-1));
    CHECK(partial_sum(sieve(FnSpec::parse("one"), 7), 7.9L).exact == Rat(7));
    CHECK_THROWS_AS(partial_sum(sieve(FnSpec::parse("one"), 7), 8.0L), range_error);
    CHECK_THROWS_AS(partial_sum(sieve(FnSpec::parse("one"), 7), 0.5L), domain_error);

    // sum_{n <= x} n^a = x^{1+a}/(1+a) + zeta(-a) + O(x^a)
    const Real a = -0.25L;
    const FnTable ida = sieve(FnSpec::parse("id_a(-0.25)"), 100);
    const Real got = partial_sum(ida, 100.0L).real();
    const Real predicted = std::pow(100.0L, 1.0L + a) / (1.0L + a) + zeta(-a);
    CHECK(std::fabs(got - predicted) < std::pow(100.0L, a));
}

TEST_CASE("hyperbola summatory of sigma_a") {
    CHECK(std::fabs(summatory_sigma_a(1.0L, -0.5L) - 1.0L) < 1e-18L);
    CHECK(std::fabs(summatory_sigma_a(4.0L, -0.5L) - 6.491564L) < 1e-6L);
    CHECK_THROWS_AS(summatory_sigma_a(0.5L, -0.5L), domain_error);

    const Real a = -0.3L;
    const std::uint64_t N = 1000000;
    const FnTable sig = sieve(FnSpec::parse("sigma_a(-0.3)"), N);
    const Real direct = partial_sum(sig, static_cast<Real>(N)).real();
    const Real fast = summatory_sigma_a(static_cast<Real>(N), a);
    CHECK(std::fabs(fast - direct) <= 1e-8L * std::fabs(direct));
    // agreement at a non-integer cut as well
    const Real direct_half = partial_sum(sig, 54321.5L).real();
    CHECK(std::fabs(summatory_sigma_a(54321.5L, a) - direct_half) <=
          1e-10L * std::fabs(direct_half));
}

TEST_CASE("mu-weighted partial sums approach their limit values") {
    // sum_{n <= x} mu(n) n^{-2} -> 1/zeta(2) and with exponent 2+a -> 1/zeta(2+a);
    // the absolute deviation must shrink through x = 1e2, 1e3, 1e4, 1e5.
    const std::uint64_t N = 100000;
    const FnTable mu = sieve(FnSpec::parse("mu"), N);
    const Real a = -0.3L;
    CompensatedSum s2, s2a;
    std::vector<Real> dev2, dev2a;
    std::uint64_t checkpoint = 100;
    for (std::uint64_t n = 1; n <= N; ++n) {
        const Real m = mu.real(n);
        if (m != 0.0L) {
            s2.add(m / (static_cast<Real>(n) * static_cast<Real>(n)));
            s2a.add(m * std::pow(static_cast<Real>(n), -(2.0L + a)));
        }
        if (n == checkpoint) {
            dev2.push_back(std::fabs(s2.value() - 1.0L / zeta(2.0L)));
            dev2a.push_back(std::fabs(s2a.value() - 1.0L / zeta(2.0L + a)));
            checkpoint *= 10;
        }
    }
    REQUIRE(dev2.size() == 4);
    for (std::size_t i = 1; i < dev2.size(); ++i) {
        CHECK(dev2[i] < dev2[i - 1]);
        CHECK(dev2a[i] < dev2a[i - 1]);
    }
}

TEST_CASE("mean square of sigma_a matches its leading constant") {
    // sum_{n <= x} sigma_a(n)^2 ~ zeta(1-a)^2 zeta(1-2a) / zeta(2-2a) * x
    const Real a = -0.3L;
    const std::uint64_t N = 1000000;
    const FnTable sig = sieve(FnSpec::parse("sigma_a(-0.3)"), N);
    CompensatedSum acc;
    for (std::uint64_t n = 1; n <= N; ++n) {
        const Real v = sig.real(n);
        acc.add(v * v);
    }
    const Real constant =
        zeta(1.0L - a) * zeta(1.0L - a) * zeta(1.0L - 2.0L * a) / zeta(2.0L - 2.0L * a);
    const Real ratio = acc.value() / (constant * static_cast<Real>(N));
    CHECK(ratio > 0.9L);
    CHECK(ratio < 1.1L);
}

TEST_CASE("real-exponent guard rejects out-of-interval values") {
    CHECK(RealExponent::open(-0.5L, -1.0L, 0.0L, "a").value == -0.5L);
    CHECK_THROWS_AS(RealExponent::open(-1.0L, -1.0L, 0.0L, "a"), domain_error);
    CHECK_THROWS_AS(RealExponent::open(0.0L, -1.0L, 0.0L, "a"), domain_error);
    CHECK_THROWS_AS(RealExponent::open(0.3L, -1.0L, 0.0L, "a"), domain_error);
}
