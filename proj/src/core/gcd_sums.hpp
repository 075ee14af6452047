#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "core/fn_table.hpp"

namespace gcdsum {

// Trial-division factorization, (prime, exponent) pairs in increasing order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
std::vector<std::uint64_t> divisors_of(std::uint64_t n);  // sorted ascending
int mobius_u64(std::uint64_t n);

// Exact power sums: T_r(n) = sum_{m <= n} m^r, and its restriction to m
// coprime to q (computed by Moebius inclusion-exclusion over q's prime set).
Rat power_sum(std::uint64_t n, unsigned r);
Rat coprime_power_sum(std::uint64_t q, unsigned r);

// P_{f,r}(k) = sum_{j=1}^{k} j^r f(gcd(j, k)).
// Two independent routes: the literal gcd loop, and the divisor form
// sum_{d | k} f(d) d^r * (power sum over m <= k/d coprime to k/d).
Rat pillai_weighted_direct(const FnTable& f, std::uint64_t k, unsigned r);
Rat pillai_weighted(const FnTable& f, std::uint64_t k, unsigned r);
Real pillai_weighted_real(const FnTable& f, std::uint64_t k, unsigned r);

// M_r(x; f) = sum_{k <= x} k^{-(r+1)} P_{f,r}(k), the literal finite sum.
// Exact tables give a rational; real tables run the direct double loop.
ScalarValue m_r_exact(const FnTable& f, Real x, unsigned r);

// Right-hand side of the closed rearrangement of M_r(x; f):
//   (1/2) sum_{n<=x} f(n)/n
// + (1/(r+1)) sum_{dl<=x} (f*mu)(d)/d
// + (1/(r+1)) sum_m binom(r+1, 2m) B_{2m} sum_{dl<=x} ((f*mu)(d)/d) l^{-2m}.
ScalarValue m_r_identity_rhs(const FnTable& f, const FnTable& f_mu, Real x, unsigned r);
ScalarValue m_r_identity_rhs(const FnTable& f, Real x, unsigned r);

// (j, k^s)_s = max{ d : d | k, d^s | j }; j = 0 counts every d (d^s | 0).
std::uint64_t generalized_gcd(std::uint64_t j, std::uint64_t k, unsigned s);

// c_k(j) = sum_{d | (j,k)} d mu(k/d); j may be 0 (value phi(k)).
long long ramanujan_sum(std::uint64_t k, std::uint64_t j);

// c_k^{(s)}(j) = sum_{d | k, d^s | j} d^s mu(k/d).
long long cohen_sum(std::uint64_t k, std::uint64_t j, unsigned s);

// sum_{d | k, d^s | j} f(d) g(k/d).
ScalarValue anderson_apostol_sum(const FnTable& f, const FnTable& g, std::uint64_t k,
                                 std::uint64_t j, unsigned s);

// M_r^{(s)}(x; f) = sum_{k <= x} k^{-s(r+1)} sum_{j=1}^{k^s} j^r
//                   sum_{d | k, d^s | j} (f*mu)(d),
// evaluated literally. `budget` caps the total number of j iterations.
ScalarValue m_rs_exact(const FnTable& f, const FnTable& f_mu, Real x, unsigned r, unsigned s,
                       std::uint64_t budget = 100'000'000ull);

// s-analog of the closed rearrangement: weights d^{-s}, inner powers l^{-2ms},
// leading block (1/2) sum f(n)/n^s.
ScalarValue m_rs_identity_rhs(const FnTable& f, const FnTable& f_mu, Real x, unsigned r,
                              unsigned s);

}  // namespace gcdsum
