#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace gcdsum {

using Real = long double;
using Rat = mpq_class;
using Int = mpz_class;

inline constexpr int kMantissaBits = 64;  // x87 extended precision mantissa

// Neumaier variant of compensated summation: keeps a running correction so
// that adding ~1e6 terms of mixed magnitude stays near one ulp of the true
// sum instead of drifting.
struct CompensatedSum {
    Real sum = 0.0L;
    Real comp = 0.0L;

    void add(Real v) {
        const Real t = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    Real value() const { return sum + comp; }
};

// Ties a real exponent to the open interval a call site requires, e.g.
// a in (-1, 0) for the sigma_a family. Construction validates once so the
// numeric kernels can assume a usable value.
struct RealExponent {
    Real value;

    static RealExponent open(Real v, Real lo, Real hi, const char* what) {
        if (!(v > lo) || !(v < hi) || !std::isfinite((double)v))
            throw domain_error(std::string(what) + ": exponent " + std::to_string((double)v) +
                               " outside (" + std::to_string((double)lo) + ", " +
                               std::to_string((double)hi) + ")");
        return RealExponent{v};
    }
};

// mpq -> long double with one Newton-style correction; plain mpq_get_d only
// carries 53 bits and the real backend promises 64.
Real to_real(const Rat& q);
Real to_real(const Int& z);

std::string rat_to_string(const Rat& q);  // canonical "p/q", "p" when q == 1

// floor of a nonnegative real that is known to fit in 64 bits.
inline std::uint64_t floor_u64(Real x) {
    if (!(x >= 0.0L)) throw domain_error("floor_u64: negative argument");
    return static_cast<std::uint64_t>(std::floor(x));
}

// Thread count taken from GCDSUM_THREADS (default 1). Results never depend
// on it: parallel loops write per-index slots and reduce in index order.
unsigned thread_budget();

// Runs fn(i) for i in [0, n). Splits into contiguous blocks when more than
// one thread is allowed; fn must only touch state owned by index i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace gcdsum
