#pragma once

// S-matrices and phase shifts for the catalog pieces: closed forms, an
// independent numeric extractor (Riccati-Bessel matching against the 1/x^2
// tails), Levinson-span bookkeeping, and sech^2 transmission.
//
// Conventions.  On a piece with the double pole at coordinate p and the
// scattering end at +infinity (left pieces are mirrored first), the real
// regular solution behaves like  alpha jhat_l(kx) + beta yhat_l(kx)  far out,
// with l(l+1) the far-tail strength.  delta = atan2(-beta, alpha), and
//   S = (-1)^l exp(2 i delta) exp(2 i k p)
// matches the  exp(-ik(x-p)) - S exp(ik(x-p))  normalization of the closed
// forms.  Comparisons are always done on complex S, never on delta branches.

#include "darboux/catalog.hpp"
#include "darboux/schrodinger.hpp"
#include "darboux/spectral.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace darboux {

using Cplx = std::complex<double>;

struct ScatteringSample {
    double k = 0;
    Cplx S;
    double delta = 0;  // radians; branch fixed only after unwrapping
    std::string piece;
};

struct LevinsonContribution {
    std::string source;
    double amount;
};

struct LevinsonSpan {
    double delta_zero = 0;  // extrapolated k -> 0+
    double delta_inf = 0;   // extrapolated k -> infinity
    double span = 0;        // delta(0) - delta(inf)
    double raw_span = 0;    // delta(kmin) - delta(kmax), no extrapolation
    std::vector<LevinsonContribution> ledger;
    double ledger_total = 0;
};

struct TransmissionSample {
    double k = 0;
    Cplx t, r;
};

// ---------------------------------------------------------------------------
// closed forms

// n=1 right piece: S = (1-ikc)/(1+ikc); defined for complex k so the pole at
// the bound-state momentum k = i/c is visible
inline Cplx smatrix_n1_right(Cplx k, double c) {
    return (1.0 - Cplx(0, 1) * k * c) / (1.0 + Cplx(0, 1) * k * c);
}

// left piece of the three-region family, constructed from the same N/D
// polynomials as the spectral equation:  S = (-1)^{n+1} (D+iN)/(D-iN) at
// kappa = kc.  For n=1 this is (1+ikc)/(1-ikc), the inverse of the right
// side; for n=2 it reduces to the quoted quadratic form.
inline Cplx smatrix_left(int n, double k, double c) {
    double kappa = k * c;
    Poly<Rat> N, D;
    if (n == 1) {
        N = Poly<Rat>{Rat(0), Rat(1)};
        D = Poly<Rat>(Rat(1));
    } else {
        auto eq = spectral_equation_build(n);
        N = eq.N;
        D = eq.D;
    }
    Cplx nd(eval_d(D, kappa), eval_d(N, kappa));
    double sign = (n % 2 == 0) ? -1.0 : 1.0;
    return sign * nd / std::conj(nd);
}

inline Cplx analytic_smatrix(const std::string& piece, int n, double k, double c) {
    if (piece == "10-right") return smatrix_n1_right(Cplx(k, 0), c);
    if (piece == "10-left") return 1.0 / smatrix_n1_right(Cplx(k, 0), c);
    if (piece == "32-right") return Cplx((n % 2 == 0) ? -1.0 : 1.0, 0.0);
    if (piece == "32-left") return smatrix_left(n, k, c);
    if (piece == "centrifugal") return Cplx((n % 2 == 0) ? 1.0 : -1.0, 0.0);
    throw std::invalid_argument("unknown scattering piece: " + piece);
}

// phase lock between the two exponential coefficients of the zero-node
// scattering solution on the right piece: a/b = -(1-ikc)/(1+ikc) exp(2ikc)
inline Cplx reflection_phase_fix(double k, double c) {
    return -smatrix_n1_right(Cplx(k, 0), c) * std::exp(Cplx(0, 2 * k * c));
}

// ---------------------------------------------------------------------------
// numeric phase-shift extraction

namespace detail {

inline double riccati_j(int l, double z) { return z * std::sph_bessel(l, z); }
inline double riccati_y(int l, double z) { return z * std::sph_neumann(l, z); }

struct RadialProblem {
    std::function<double(double)> V;  // in the integration coordinate
    LaurentData pole_series;          // at the pole, seen from inside
    double pole_x;                    // pole location (integration coordinate)
    int l_tail;                       // far-field strength l(l+1)
    double phase_center;              // p in exp(2ikp)
};

inline RadialProblem radial_problem(const PotentialSpec& spec, const std::string& side) {
    RadialProblem rp;
    if (side == "right") {
        const PoleInfo& p = spec.poles.back();  // rightmost pole
        rp.V = spec.value;
        rp.pole_series = laurent_at_pole(spec, p);
        rp.pole_x = p.location;
        rp.phase_center = p.location;
    } else if (side == "left") {
        const PoleInfo& p = spec.poles.front();  // leftmost pole
        auto v = spec.value;
        rp.V = [v](double y) { return v(-y); };
        rp.pole_series = laurent_at_pole(spec, p).mirrored();
        rp.pole_x = -p.location;
        rp.phase_center = -p.location;
    } else {
        throw std::invalid_argument("side must be left or right");
    }
    double lt = side == "right" ? spec.tail_right : spec.tail_left;
    rp.l_tail = (int)std::lround((std::sqrt(1 + 4 * lt) - 1) / 2);
    return rp;
}

}  // namespace detail

inline ScatteringSample numeric_phase_shift(const PotentialSpec& spec,
                                            const std::string& side, double k,
                                            double R = 40.0, double h = 1e-3) {
    detail::RadialProblem rp = detail::radial_problem(spec, side);
    double inset = 0.05;
    double x0 = rp.pole_x + inset;
    auto fs = frobenius_series(rp.pole_series, k * k);

    for (int attempt = 0; attempt < 3; ++attempt) {
        double R2 = R + M_PI / (2 * k);
        int n = (int)std::ceil((R2 - x0) / h) + 1;
        double step = (R2 - x0) / (n - 1);
        auto sol = numerov_integrate<double>(rp.V, k * k, x0, step, n, fs.eval(inset).first,
                                             fs.eval(inset + step).first);
        int iR = (int)std::lround((R - x0) / step);
        double xa = sol.x[iR], ua = sol.psi[iR];
        double xb = sol.x.back(), ub = sol.psi.back();
        double ja = detail::riccati_j(rp.l_tail, k * xa);
        double ya = detail::riccati_y(rp.l_tail, k * xa);
        double jb = detail::riccati_j(rp.l_tail, k * xb);
        double yb = detail::riccati_y(rp.l_tail, k * xb);
        double det = ja * yb - jb * ya;
        double scale = std::max({std::abs(ja * yb), std::abs(jb * ya), 1e-30});
        if (std::abs(det) < 1e-8 * scale) {
            R += 1.0;  // degenerate pair of radii; shift and retry
            continue;
        }
        double alpha = (ua * yb - ub * ya) / det;
        double beta = (ub * ja - ua * jb) / det;
        ScatteringSample out;
        out.k = k;
        out.delta = std::atan2(-beta, alpha);
        double lsign = (rp.l_tail % 2 == 0) ? 1.0 : -1.0;
        out.S = lsign * std::exp(Cplx(0, 2 * out.delta)) *
                std::exp(Cplx(0, 2 * k * rp.phase_center));
        out.piece = spec.family + "-" + side;
        return out;
    }
    throw std::runtime_error("phase-shift matching stayed singular after retries");
}

// ---------------------------------------------------------------------------
// Levinson span

// unwrapped phase shift over a k-grid, anchored at the k_max end
// to -l_short pi/2 (the short-tail value), then continued toward k -> 0
inline LevinsonSpan levinson_span(const PotentialSpec& spec, const std::string& side,
                                  int bound_states, int l_short,
                                  double kmin = 0.05, double kmax = 20.0,
                                  int npts = 60, double R = 40.0) {
    detail::RadialProblem rp = detail::radial_problem(spec, side);
    std::vector<double> ks(npts), deltas(npts);
    for (int i = 0; i < npts; ++i)
        ks[i] = kmin * std::pow(kmax / kmin, double(i) / (npts - 1));
    for (int i = 0; i < npts; ++i) {
        auto s = numeric_phase_shift(spec, side, ks[i], R);
        deltas[i] = 0.5 * std::arg(s.S);  // mod pi at this stage
    }
    // anchor the top of the grid near -l_short pi/2, then unwrap downward
    double anchor = -l_short * M_PI / 2;
    double top = deltas[npts - 1];
    top += M_PI * std::round((anchor - top) / M_PI);
    deltas[npts - 1] = top;
    for (int i = npts - 2; i >= 0; --i) {
        double d = deltas[i];
        d += M_PI * std::round((deltas[i + 1] - d) / M_PI);
        deltas[i] = d;
    }
    LevinsonSpan out;
    // Richardson: delta ~ delta0 + a k near 0, ~ delta_inf + b/k far out
    double r01 = ks[1] / ks[0];
    out.delta_zero = (r01 * deltas[0] - deltas[1]) / (r01 - 1);
    double rn = ks[npts - 1] / ks[npts - 2];
    out.delta_inf = (rn * deltas[npts - 1] - deltas[npts - 2]) / (rn - 1);
    out.span = out.delta_zero - out.delta_inf;
    out.raw_span = deltas.front() - deltas.back();
    int l_long = rp.l_tail;
    out.ledger.push_back({"bound states", bound_states * M_PI});
    out.ledger.push_back({"long tail", -l_long * M_PI / 2});
    out.ledger.push_back({"short tail", +l_short * M_PI / 2});
    for (const auto& c : out.ledger) out.ledger_total += c.amount;
    return out;
}

// ---------------------------------------------------------------------------
// reflectionless family

// analytic transmission for -n(n+1) cosh^-2: product of the one-step factors
inline Cplx sech_transmission_analytic(int n, double k) {
    Cplx t(1, 0);
    for (int j = 1; j <= n; ++j) t *= (Cplx(0, k) - double(j)) / (Cplx(0, k) + double(j));
    return t;
}

// numeric transmission/reflection by integrating a transmitted plane wave
// from the far right back across the well
inline TransmissionSample sech_transmission(int n, double k, double L = 20.0,
                                            double h = 1e-3) {
    auto V = [n](double x) {
        double c = std::cosh(x);
        return -n * (n + 1) / (c * c);
    };
    int steps = (int)std::ceil(2 * L / h) + 1;
    double hs = 2 * L / (steps - 1);
    Cplx ik(0, k);
    auto sol = numerov_integrate<Cplx>(V, k * k, L, -hs, steps, std::exp(ik * L),
                                       std::exp(ik * (L - hs)));
    Cplx psi = sol.psi.back();
    Cplx dpsi = sol.deriv(sol.x.size() - 1);
    double xe = sol.x.back();
    Cplx A = 0.5 * (psi + dpsi / ik) * std::exp(-ik * xe);
    Cplx B = 0.5 * (psi - dpsi / ik) * std::exp(ik * xe);
    TransmissionSample out;
    out.k = k;
    out.t = 1.0 / A;
    out.r = B / A;
    return out;
}

}  // namespace darboux
