#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/numeric.hpp"

namespace gcdsum {

enum class Backend { exact, real };

// Catalog of arithmetic functions the sieve knows how to build. All of them
// are multiplicative, so a table is filled from values at prime powers.
enum class FnKind {
    mu,         // Moebius
    abs_mu,     // squarefree indicator
    one,        // constant 1
    id,         // n
    id_a,       // n^a, real exponent
    tau,        // number of divisors
    sigma_a,    // sum of d^a over divisors
    phi,        // Euler totient
    psi,        // Dedekind psi
    phi_alpha,  // Jordan-style totient: p^{alpha e} - p^{alpha (e-1)}
    psi_beta,   // p^{beta e} + p^{beta (e-1)}
    xi_q,       // indicator of q-free numbers
};

struct FnSpec {
    FnKind kind = FnKind::one;
    Real exponent = 0.0L;  // id_a, sigma_a, phi_alpha, psi_beta
    unsigned q = 2;        // xi_q

    // Accepts bare names ("mu", "tau", ...) and parameterized forms
    // "id_a(-0.5)", "sigma_a(a=-0.3)", "phi_alpha(2)", "xi_q(q=3)".
    static FnSpec parse(const std::string& text);

    std::string label() const;
    bool parametrized() const;
    bool integer_exponent() const;
    // Exact tables exist whenever every value is rational: all bare kinds,
    // xi_q, and the exponent kinds with an integral exponent.
    bool exact_capable() const;
};

// Values of one arithmetic function on 1..limit, on either backend.
class FnTable {
  public:
    FnTable() = default;

    Backend backend() const { return backend_; }
    bool is_exact() const { return backend_ == Backend::exact; }
    std::uint64_t limit() const { return limit_; }
    const std::string& label() const { return label_; }
    // 0 = exact (no rounding); otherwise the mantissa width of the real type.
    int mantissa_bits() const { return is_exact() ? 0 : kMantissaBits; }

    const Rat& rat(std::uint64_t n) const;  // exact backend only
    Real real(std::uint64_t n) const;       // either backend

    static FnTable make_exact(std::vector<Rat> values, std::string label);
    static FnTable make_real(std::vector<Real> values, std::string label);

  private:
    Backend backend_ = Backend::exact;
    std::uint64_t limit_ = 0;
    std::vector<Rat> exact_;  // 1-based, [0] unused
    std::vector<Real> real_;
    std::string label_;
};

// Sieves spec on 1..limit. The one-argument form picks the exact backend
// whenever the spec supports it; forcing Backend::exact on a real-only spec
// raises backend_error, forcing Backend::real always works.
FnTable sieve(const FnSpec& spec, std::uint64_t limit);
FnTable sieve(const FnSpec& spec, std::uint64_t limit, Backend backend);

// Dirichlet convolution h(n) = sum_{d | n} f(d) g(n/d) on 1..min(limits).
// Exact when both inputs are exact, real otherwise.
FnTable dirichlet_convolve(const FnTable& f, const FnTable& g);

// A value that is rational on the exact backend and a long double otherwise.
struct ScalarValue {
    Backend backend = Backend::real;
    Rat exact;
    Real approx = 0.0L;

    static ScalarValue from_rat(Rat q);
    static ScalarValue from_real(Real r);
    Real real() const { return approx; }
    std::string str() const;  // "p/q" or 17 significant digits
};

// sum_{n <= x} f(n). Requires x >= 1 and floor(x) <= f.limit().
ScalarValue partial_sum(const FnTable& f, Real x);

// sum_{n <= x} sigma_a(n) for -1 < a < 0, via the divisor hyperbola with
// Euler-Maclaurin power sums on the long side. O(sqrt(x)) time, no tables.
Real summatory_sigma_a(Real x, Real a);

// sum_{n <= y} n^a for -1 < a < 1 (Euler-Maclaurin beyond a small cut).
Real partial_power_sum(Real y, Real a);

// Exact count sum_{n <= x} tau(n) by the hyperbola identity.
std::uint64_t summatory_tau(std::uint64_t x);

std::uint64_t isqrt_u64(std::uint64_t n);

}  // namespace gcdsum
