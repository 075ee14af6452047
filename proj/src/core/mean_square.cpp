#include "core/mean_square.hpp"

#include <algorithm>
#include <cmath>

#include "core/special_values.hpp"

namespace gcdsum {

namespace {

// 8-point Gauss-Legendre nodes and weights mapped to [0, 1].
constexpr int kGL = 8;
constexpr Real kGLx[kGL] = {
    0.0198550717512318841L, 0.1016667612931866302L, 0.2372337950418355071L,
    0.4082826787521750975L, 0.5917173212478249025L, 0.7627662049581644929L,
    0.8983332387068133698L, 0.9801449282487681159L,
};
constexpr Real kGLw[kGL] = {
    0.0506142681451881296L, 0.1111905172266872353L, 0.1568533229389436436L,
    0.1813418916891809915L, 0.1813418916891809915L, 0.1568533229389436436L,
    0.1111905172266872353L, 0.0506142681451881296L,
};

TheoremId lab_theorem(MeanSquareKind k) {
    switch (k) {
        case MeanSquareKind::Th3: return TheoremId::Th1;
        case MeanSquareKind::Th4_phi: return TheoremId::Th2_phi;
        case MeanSquareKind::Th4_psi: return TheoremId::Th2_psi;
        case MeanSquareKind::Lrx: return TheoremId::K_phi;
        case MeanSquareKind::Urx: return TheoremId::gcd331;
        case MeanSquareKind::DeltaA: break;
    }
    throw domain_error("mean square: no backing average for this kind");
}

}  // namespace

SeriesKind parse_series_kind(const std::string& token) {
    if (token == "C2") return SeriesKind::C2;
    if (token == "C3") return SeriesKind::C3;
    if (token == "C4") return SeriesKind::C4;
    if (token == "D1") return SeriesKind::D1;
    if (token == "D2") return SeriesKind::D2;
    if (token == "Kmean") return SeriesKind::Kmean;
    throw config_error("unknown series constant '" + token + "'");
}

std::string series_kind_token(SeriesKind k) {
    switch (k) {
        case SeriesKind::C2: return "C2";
        case SeriesKind::C3: return "C3";
        case SeriesKind::C4: return "C4";
        case SeriesKind::D1: return "D1";
        case SeriesKind::D2: return "D2";
        case SeriesKind::Kmean: return "Kmean";
    }
    return "?";
}

MeanSquareKind parse_mean_square_kind(const std::string& token) {
    if (token == "Th3") return MeanSquareKind::Th3;
    if (token == "Th4-phi") return MeanSquareKind::Th4_phi;
    if (token == "Th4-psi") return MeanSquareKind::Th4_psi;
    if (token == "Lrx") return MeanSquareKind::Lrx;
    if (token == "Urx") return MeanSquareKind::Urx;
    if (token == "delta-a") return MeanSquareKind::DeltaA;
    throw config_error("unknown mean-square selector '" + token + "'");
}

std::string mean_square_kind_token(MeanSquareKind k) {
    switch (k) {
        case MeanSquareKind::Th3: return "Th3";
        case MeanSquareKind::Th4_phi: return "Th4-phi";
        case MeanSquareKind::Th4_psi: return "Th4-psi";
        case MeanSquareKind::Lrx: return "Lrx";
        case MeanSquareKind::Urx: return "Urx";
        case MeanSquareKind::DeltaA: return "delta-a";
    }
    return "?";
}

SeriesConstant series_constant(SeriesKind kind, std::optional<Real> a, std::uint64_t N) {
    if (N < 1) throw domain_error("series_constant: truncation below 1");
    SeriesConstant out;
    out.kind = kind;
    out.truncation = N;
    const Real pi = std::acos(-1.0L);

    if (kind == SeriesKind::Kmean) {
        if (!a) throw domain_error("series_constant: Kmean needs a");
        RealExponent::open(*a, -0.5L, 0.0L, "series_constant Kmean");
        out.a = a;
        const Real av = *a;
        out.value = zeta(1.5L - av) * zeta(1.5L + av) * zeta(1.5L) * zeta(1.5L) /
                    (zeta(3.0L) * (6.0L + 4.0L * av) * pi * pi);
        out.tail_bound = 0.0L;
        return out;
    }

    const bool sigma_kind =
        kind == SeriesKind::C2 || kind == SeriesKind::C3 || kind == SeriesKind::C4;
    Real av = -0.5L;
    if (sigma_kind) {
        if (!a) throw domain_error("series_constant: this kind needs a");
        RealExponent::open(*a, -1.0L, 0.0L, "series_constant");
        av = *a;
        out.a = a;
    }

    // left factor u(n) and right factor t(n) of h = u * t
    const FnTable mu_t = sieve(FnSpec{FnKind::mu}, N, Backend::real);
    FnTable left;
    switch (kind) {
        case SeriesKind::C2: left = mu_t; break;
        case SeriesKind::C3:
        case SeriesKind::D1: left = dirichlet_convolve(mu_t, mu_t); break;
        case SeriesKind::C4:
        case SeriesKind::D2:
            left = dirichlet_convolve(mu_t, sieve(FnSpec{FnKind::abs_mu}, N, Backend::real));
            break;
        default: throw domain_error("series_constant: bad kind");
    }
    const Real down = sigma_kind ? (1.0L + av) / 2.0L : 0.5L;
    std::vector<Real> u(static_cast<std::size_t>(N) + 1, 0.0L);
    for (std::uint64_t i = 1; i <= N; ++i)
        u[static_cast<std::size_t>(i)] = left.real(i) * std::pow((Real)i, -down);

    const FnTable right = sigma_kind ? sieve(FnSpec{FnKind::sigma_a, av}, N, Backend::real)
                                     : sieve(FnSpec{FnKind::tau}, N, Backend::real);

    std::vector<Real> h(static_cast<std::size_t>(N) + 1, 0.0L);
    for (std::uint64_t d = 1; d <= N; ++d) {
        const Real ud = u[static_cast<std::size_t>(d)];
        if (ud == 0.0L) continue;
        for (std::uint64_t l = 1, m = d; m <= N; ++l, m += d)
            h[static_cast<std::size_t>(m)] += ud * right.real(l);
    }

    const Real prefac = sigma_kind ? 1.0L / (2.0L * (3.0L + 2.0L * av) * pi * pi)
                                   : 1.0L / (6.0L * pi * pi);
    CompensatedSum series;
    Real envelope = 0.0L;  // max |h(n)| / n^{0.1}
    for (std::uint64_t i = 1; i <= N; ++i) {
        const Real hi = h[static_cast<std::size_t>(i)];
        series.add(hi * hi * std::pow((Real)i, -1.5L));
        envelope = std::max(envelope, std::fabs(hi) * std::pow((Real)i, -0.1L));
    }
    out.value = prefac * series.value();
    // Tail estimate from the observed envelope |h(n)| <= c n^{0.1}, inflated
    // by 4: sum_{n>N} (4c)^2 n^{0.2-1.5} <= 16 c^2 N^{-0.3}/0.3.
    out.tail_bound = prefac * 16.0L * envelope * envelope * std::pow((Real)N, -0.3L) / 0.3L;
    return out;
}

MeanSquareLab::MeanSquareLab(MeanSquareKind kind, const SumParams& p, std::uint64_t limit)
    : kind_(kind), limit_(limit) {
    if (limit < 2) throw domain_error("MeanSquareLab: limit >= 2 required");
    if (kind == MeanSquareKind::DeltaA) {
        if (!p.a) throw domain_error("MeanSquareLab: delta-a needs a");
        from_zero_ = true;
        sig_ = std::make_shared<SigmaSummatory>(*p.a, limit);
        steps_.assign(static_cast<std::size_t>(limit) + 1, 0.0L);
        for (std::uint64_t m = 1; m <= limit; ++m)
            steps_[static_cast<std::size_t>(m)] = sig_->summatory((Real)m);
        return;
    }
    ErrorTermLab lab(lab_theorem(kind), p, limit);
    model_ = lab.model();
    steps_ = lab.exact_steps();
}

Real MeanSquareLab::integrand(Real x) const {
    if (!(x >= lower_end())) throw domain_error("MeanSquareLab: x below the lower end");
    const std::uint64_t X = floor_u64(x);
    if (X > limit_) throw range_error("MeanSquareLab: x beyond build limit");
    const Real step = steps_[static_cast<std::size_t>(X)];
    if (kind_ == MeanSquareKind::DeltaA) return step - sig_->smooth(x);
    return step - main_term(model_, x);
}

Real MeanSquareLab::integrate(Real lo, Real hi) const {
    if (!(lo >= lower_end()) || !(hi >= lo))
        throw domain_error("MeanSquareLab: bad integration interval");
    if (hi > (Real)limit_ + 1.0L - 1e-9L && floor_u64(hi) > limit_)
        throw range_error("MeanSquareLab: interval beyond build limit");
    CompensatedSum acc;
    Real left = lo;
    while (left < hi) {
        const Real right = std::min(hi, std::floor(left) + 1.0L);
        const Real w = right - left;
        if (w <= 0.0L) break;
        const std::uint64_t m = floor_u64(left);
        const Real step = steps_[static_cast<std::size_t>(std::min<std::uint64_t>(m, limit_))];
        for (int i = 0; i < kGL; ++i) {
            const Real x = left + w * kGLx[i];
            const Real smooth =
                kind_ == MeanSquareKind::DeltaA ? sig_->smooth(x) : main_term(model_, x);
            const Real k = step - smooth;
            acc.add(w * kGLw[i] * k * k);
        }
        left = right;
    }
    return acc.value();
}

Real integrate_K_squared(MeanSquareKind kind, const SumParams& p, Real T) {
    if (!(T >= 1.0L)) throw domain_error("integrate_K_squared: requires T >= 1");
    const std::uint64_t limit = floor_u64(std::ceil(T));
    MeanSquareLab lab(kind, p, std::max<std::uint64_t>(limit, 2));
    return lab.integrate(lab.lower_end(), T);
}

MeanSquareReport mean_square_report(MeanSquareKind kind, const SumParams& p,
                                    std::vector<Real> T_list, std::uint64_t series_N) {
    if (T_list.empty()) throw domain_error("mean_square_report: empty T list");
    std::sort(T_list.begin(), T_list.end());
    if (!(T_list.front() >= 1.0L))
        throw domain_error("mean_square_report: T values must be >= 1");
    const std::uint64_t limit = floor_u64(std::ceil(T_list.back()));

    MeanSquareReport rep;
    rep.kind = kind;
    rep.params = p;

    SeriesKind sk = SeriesKind::C2;
    switch (kind) {
        case MeanSquareKind::Th3: sk = SeriesKind::C2; break;
        case MeanSquareKind::Th4_phi: sk = SeriesKind::C3; break;
        case MeanSquareKind::Th4_psi: sk = SeriesKind::C4; break;
        case MeanSquareKind::Lrx: sk = SeriesKind::D1; break;
        case MeanSquareKind::Urx: sk = SeriesKind::D2; break;
        case MeanSquareKind::DeltaA: sk = SeriesKind::Kmean; break;
    }
    rep.constant = series_constant(sk, p.a, series_N);

    MeanSquareLab lab(kind, p, std::max<std::uint64_t>(limit, 2));
    const Real r1 = (Real)(p.r + 1);
    const Real growth = kind == MeanSquareKind::Lrx || kind == MeanSquareKind::Urx
                            ? 1.5L
                            : 1.5L + *p.a;
    const Real prefac = kind == MeanSquareKind::DeltaA ? 1.0L : 1.0L / (r1 * r1);

    CompensatedSum acc;
    Real left = lab.lower_end();
    for (Real T : T_list) {
        acc.add(lab.integrate(left, T));
        left = T;
        MeanSquareRow row;
        row.T = T;
        row.integral = acc.value();
        row.prediction = prefac * rep.constant.value * std::pow(T, growth);
        row.ratio = row.integral / row.prediction;
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace gcdsum
