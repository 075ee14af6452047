#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/asymptotics.hpp"

namespace gcdsum {

// Leading constants of the second-moment asymptotics, each a convergent
// series prefac * sum h(n)^2 / n^{3/2} (Kmean is a closed zeta expression).
enum class SeriesKind {
    C2,     // h = (mu / id^{(1+a)/2}) * sigma_a
    C3,     // h = ((mu*mu) / id^{(1+a)/2}) * sigma_a
    C4,     // h = ((mu*|mu|) / id^{(1+a)/2}) * sigma_a
    D1,     // h = ((mu*mu) / sqrt(id)) * tau
    D2,     // h = ((mu*|mu|) / sqrt(id)) * tau
    Kmean,  // closed form for the sigma_a remainder itself
};
SeriesKind parse_series_kind(const std::string& token);
std::string series_kind_token(SeriesKind k);

struct SeriesConstant {
    SeriesKind kind = SeriesKind::C2;
    std::optional<Real> a;
    std::uint64_t truncation = 0;
    Real value = 0.0L;
    Real tail_bound = 0.0L;  // empirical-envelope bound on the dropped tail
};

// C2/C3/C4 need a in (-1, 0); D1/D2 ignore a; Kmean needs a in (-1/2, 0).
SeriesConstant series_constant(SeriesKind kind, std::optional<Real> a, std::uint64_t N);

// Mean-square experiments: integrand selector + predicted growth.
enum class MeanSquareKind {
    Th3,      // remainder of the id_{1+a} average, prediction C2/(r+1)^2 T^{3/2+a}
    Th4_phi,  // phi_{1+a} average, C3
    Th4_psi,  // psi_{1+a} average, C4
    Lrx,      // phi average (x log x family), D1/(r+1)^2 T^{3/2}
    Urx,      // psi average, D2
    DeltaA,   // sigma_a remainder itself, Kmean T^{3/2+a}, integral from 0
};
MeanSquareKind parse_mean_square_kind(const std::string& token);
std::string mean_square_kind_token(MeanSquareKind k);

// Squared-integrand integrator over unit intervals: the exact sums are step
// functions between consecutive integers, the smooth main term is handled by
// fixed-order Gauss-Legendre nodes per interval.
class MeanSquareLab {
  public:
    MeanSquareLab(MeanSquareKind kind, const SumParams& p, std::uint64_t limit);

    MeanSquareKind kind() const { return kind_; }
    std::uint64_t limit() const { return limit_; }
    Real lower_end() const { return from_zero_ ? 0.0L : 1.0L; }

    Real integrate(Real lo, Real hi) const;  // integral of K(x)^2 dx
    Real integrand(Real x) const;            // K(x) itself

  private:
    MeanSquareKind kind_;
    std::uint64_t limit_;
    bool from_zero_ = false;
    std::vector<Real> steps_;  // exact sum value on [m, m+1)
    MainTermModel model_;      // smooth part for the lab kinds
    std::shared_ptr<SigmaSummatory> sig_;  // DeltaA smooth part
};

// integral_{lower}^{T} K^2 with tables built to ceil(T).
Real integrate_K_squared(MeanSquareKind kind, const SumParams& p, Real T);

struct MeanSquareRow {
    Real T = 0, integral = 0, prediction = 0, ratio = 0;
};

struct MeanSquareReport {
    MeanSquareKind kind = MeanSquareKind::Th3;
    SumParams params;
    SeriesConstant constant;
    std::vector<MeanSquareRow> rows;
};

// One pass over ascending T values reusing a single table build; prediction
// constants truncated at series_N.
MeanSquareReport mean_square_report(MeanSquareKind kind, const SumParams& p,
                                    std::vector<Real> T_list, std::uint64_t series_N);

}  // namespace gcdsum
