#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/fn_table.hpp"

namespace gcdsum {

// Model selectors for the closed main terms of the weighted averages.
// Each one fixes a weight function, a remainder kind, and the coefficient
// formulas; the token spellings are part of the CLI contract.
enum class TheoremId {
    K_id,         // f = id, x log x family
    K_phi,        // f = phi
    gcd331,       // f = psi
    Th1,          // f = id_{1+a}
    Th2_phi,      // f = phi_{1+a}
    Th2_psi,      // f = psi_{1+a}
    Th5,          // s-weighted, f = id_{s+a}
    Th6_h,        // s-weighted, f = h * id_s, h selectable
    Th7_h,        // s-weighted, f = h * id_{s+a}
    Cor_phi_s,    // Th6 with h = mu
    Cor_psi_s,    // Th6 with h = |mu|
    Cor_tau,      // Th6 with h = tau
    Cor_phi_sa,   // Th7 with h = mu
    Cor_psi_sa,   // Th7 with h = |mu|
    Cor_tau_sa,   // Th7 with h = tau
};

TheoremId parse_theorem(const std::string& token);
std::string theorem_token(TheoremId id);

enum class HKind { mu, abs_mu, tau, xi_q };
HKind parse_h_kind(const std::string& token);
std::string h_kind_token(HKind h);

struct SumParams {
    unsigned r = 1;
    unsigned s = 2;            // s-weighted families
    std::optional<Real> a;     // fractional-exponent families, a in (-1, 0)
    HKind h = HKind::mu;       // Th6/Th7
    unsigned q = 2;            // h = xi_q
};

// x log x, x, and x^{1+a} coefficients of the closed main term.
struct MainTermModel {
    TheoremId id = TheoremId::K_id;
    SumParams params;
    Real c_xlogx = 0.0L;
    Real c_x = 0.0L;
    Real c_x1pa = 0.0L;
    Real exponent = 0.0L;  // 1+a where c_x1pa applies
};

MainTermModel main_term_model(TheoremId id, const SumParams& p);
Real main_term(const MainTermModel& m, Real x);

// first difference to the sawtooth: x - [x] - 1/2
Real vartheta(Real x);

// D_s(x)  = -sum_{d<=x}  mu(d)  d^{-s} vartheta(x/d) - 1/(2 zeta(s))
// D~_s(x) = -sum_{d<=x} |mu(d)| d^{-s} vartheta(x/d) - zeta(s)/(2 zeta(2s))
// The optional table (a mu / abs_mu table of limit >= x) avoids re-sieving.
Real d_series(Real x, unsigned s, const FnTable* mu_table = nullptr);
Real d_series_tilde(Real x, unsigned s, const FnTable* abs_mu_table = nullptr);

// H_h(sigma) = sum h(n) n^{-sigma} in closed zeta form, and its derivative.
Real h_series(HKind h, Real sigma, unsigned q = 2);
Real h_series_prime(HKind h, Real sigma, unsigned q = 2);

// Divisor and sigma_a summatory remainders, standalone O(sqrt x) evaluations.
Real delta_divisor(Real x);
Real delta_a(Real x, Real a);

// Truncated oscillating expansion of delta_a. `truncation_ok`, when given,
// reports whether N <= x (the regime the error bound is stated for); larger
// N still evaluates.
Real voronoi_delta_a(Real x, Real a, std::uint64_t N, bool* truncation_ok = nullptr);

// Cached prefix of sigma_a values: O(1) summatory and remainder lookups for
// arguments up to the build limit.
class SigmaSummatory {
  public:
    SigmaSummatory(Real a, std::uint64_t limit);
    Real a() const { return a_; }
    std::uint64_t limit() const { return limit_; }
    Real summatory(Real x) const;  // sum_{n <= x} sigma_a(n), x <= limit
    Real smooth(Real x) const;     // zeta(1-a) x + zeta(1+a)/(1+a) x^{1+a} - zeta(-a)/2
    Real delta(Real x) const;      // summatory - smooth

  private:
    Real a_;
    std::uint64_t limit_;
    std::vector<Real> prefix_;
    Real z1ma_, z1pa_, zma_;
};

class TauSummatory {
  public:
    explicit TauSummatory(std::uint64_t limit);
    std::uint64_t limit() const { return limit_; }
    Real summatory(std::uint64_t n) const;
    Real delta(Real x) const;  // summatory - (x log x + (2 gamma - 1) x)

  private:
    std::uint64_t limit_;
    std::vector<std::uint64_t> prefix_;
};

struct ErrorSample {
    Real x = 0, exact = 0, main = 0, K = 0, K_formula = 0, residual = 0;
};

// Everything needed to sample one model's remainder on 1..limit: the exact
// finite sum via its divisor rearrangement, the closed main term, and the
// displayed remainder formula (delta-weighted sum plus constant block).
class ErrorTermLab {
  public:
    ErrorTermLab(TheoremId id, const SumParams& p, std::uint64_t limit);

    const MainTermModel& model() const { return model_; }
    std::uint64_t limit() const { return limit_; }

    Real exact_value(Real x) const;
    Real k_formula(Real x) const;
    ErrorSample at(Real x) const;
    std::vector<ErrorSample> sweep(const std::vector<Real>& xs) const;

    // step values of the exact sum at 1..limit, built in O(limit log limit);
    // the mean-square integrator consumes this directly.
    std::vector<Real> exact_steps() const;

  private:
    MainTermModel model_;
    std::uint64_t limit_;
    unsigned pw_ = 1;                  // d-exponent in the rearrangement
    std::vector<Real> g_over_;         // (f*mu)(d) / d^pw
    std::vector<Real> w_over_;         // remainder-formula weight(n) / n^pw
    std::vector<Real> tn_;             // t-norm factor at each l
    std::vector<Real> wprefix_;        // prefix sums of the t-norm factors
    std::vector<Real> theta_w_;        // sawtooth-sum weights, empty if unused
    Real theta_coeff_ = 0.0L;
    Real const_block_ = 0.0L;
    std::shared_ptr<SigmaSummatory> sig_;
    std::shared_ptr<TauSummatory> tau_;
};

// One-shot sample of a model at x (builds tables up to x).
ErrorSample error_term(TheoremId id, const SumParams& p, Real x);

// sum_{n <= x} w(n) n^{-p} * Delta(x/n), with Delta = delta_a when `a` is
// given and the divisor remainder otherwise.
Real weighted_delta_sum(const FnTable& w, Real p, Real x, std::optional<Real> a);

// Deterministic sample grid: log-spaced points joined with integer windows
// (consecutive integers and half-integers near lo, hi/10 and hi).
std::vector<Real> sweep_grid(Real lo, Real hi);

// Partial-sum lemma checks: exact block sum, its displayed smooth main part,
// and the leftover after also removing the displayed delta-weighted sum.
enum class LemmaId {
    lem2_sigma1,  // sum (mu/id * sigma_a), delta_a-weighted remainder
    lem2_la,      // sum_{dl<=x} (mu/id * id^{-2m})(d) l^a
    lem2_mu,      // sum (phi_{1+a}*mu)(d)/d * [x/d], (mu*mu) weights
    lem2_psi,     // psi variant, (|mu|*mu) weights
    lem2_l2m,     // sum (phi_{1+a}*mu)(d)/d * l^{-2m}
    lem2_psi2m,   // psi variant of the same
};
LemmaId parse_lemma(const std::string& token);
std::string lemma_token(LemmaId id);

struct LemmaCheck {
    Real exact = 0, predicted_main = 0, residual = 0;
};
LemmaCheck lemma_sum_check(LemmaId id, Real x, Real a, unsigned m);

}  // namespace gcdsum
