#pragma once

// Darboux factorization engine: superpotentials from seed solutions, partner
// potentials, intertwined wavefunctions, second solutions, multi-step chains.
//
// Two routes share one API shape.  The exact route works on Ratio<F> over any
// coefficient field (plain Q, Q(mu), ...) and is used whenever every input is
// rational, so the catalog identities come out as identities.  The jet route
// carries everything else through truncated Taylor arithmetic.

#include "darboux/expr.hpp"
#include "darboux/jet.hpp"
#include "darboux/rational.hpp"

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace darboux {

struct SeedValidationError : std::runtime_error {
    int step;
    double max_residual;
    SeedValidationError(int step_, double res)
        : std::runtime_error("seed at step " + std::to_string(step_) +
                             " does not solve the running potential (max residual " +
                             std::to_string(res) + ")"),
          step(step_), max_residual(res) {}
};

struct ZeroCrossingError : std::runtime_error {
    double location;
    explicit ZeroCrossingError(double x)
        : std::runtime_error("wavefunction zero inside integration path near x=" +
                             std::to_string(x)),
          location(x) {}
};

// ---------------------------------------------------------------------------
// exact (rational) route

// W' = -phi'/phi
template <class F>
Ratio<F> superpotential(const Ratio<F>& phi) {
    if (phi.is_zero()) throw std::invalid_argument("superpotential of the zero seed");
    return Ratio<F>(0) - phi.derivative() / phi;
}

// V1 = W'^2 + W'' + E0
template <class F>
Ratio<F> partner_potential(const Ratio<F>& wprime, const F& e0) {
    return wprime * wprime + wprime.derivative() + Ratio<F>(e0);
}

// -phi'' + (V - e0) phi; identically zero iff phi solves the potential
template <class F>
Ratio<F> schrodinger_residual(const Ratio<F>& v, const Ratio<F>& phi, const F& e0) {
    return Ratio<F>(0) - phi.derivative().derivative() + (v - Ratio<F>(e0)) * phi;
}

template <class F>
struct RationalStep {
    Ratio<F> seed;
    Ratio<F> wprime;
    F e0;
};

template <class F>
struct RationalChain {
    Ratio<F> v0;
    std::vector<RationalStep<F>> steps;
    Ratio<F> final_potential;
};

// iterate partner construction; every seed must solve the running potential
// exactly (all chain seeds here live at E0 = 0)
template <class F>
RationalChain<F> chain_build(const Ratio<F>& v0, const std::vector<Ratio<F>>& seeds) {
    RationalChain<F> chain;
    chain.v0 = v0;
    Ratio<F> v = v0;
    for (size_t i = 0; i < seeds.size(); ++i) {
        if (!schrodinger_residual(v, seeds[i], F(0)).is_zero())
            throw SeedValidationError(static_cast<int>(i), 1.0);
        Ratio<F> wp = superpotential(seeds[i]);
        v = partner_potential(wp, F(0));
        chain.steps.push_back({seeds[i], wp, F(0)});
    }
    chain.final_potential = v;
    return chain;
}

// second solution when psi1 is a monomial c x^m: psi1 \int psi1^{-2}
// = x^{1-m} / (c (1-2m))
template <class F>
Ratio<F> second_solution_monomial(const Ratio<F>& psi1) {
    const auto& n = psi1.num;
    const auto& d = psi1.den;
    int mn = -1, md = -1;
    for (int k = 0; k <= n.degree(); ++k)
        if (!(n.coeff(k) == F(0))) {
            if (mn >= 0) throw std::invalid_argument("psi1 is not a monomial");
            mn = k;
        }
    for (int k = 0; k <= d.degree(); ++k)
        if (!(d.coeff(k) == F(0))) {
            if (md >= 0) throw std::invalid_argument("psi1 is not a monomial");
            md = k;
        }
    int m = mn - md;
    F c = n.coeff(mn) / d.coeff(md);
    if (2 * m == 1) throw std::invalid_argument("m = 1/2 cannot occur for integer powers");
    F scale = F(1) / (c * F(1 - 2 * m));
    // x^{1-m}
    if (m <= 1) return Ratio<F>(Poly<F>::monomial(scale, 1 - m));
    return Ratio<F>(Poly<F>(scale), Poly<F>::monomial(F(1), m - 1));
}

// ---------------------------------------------------------------------------
// jet route

// a wavefunction (or potential term) queried for jets of requested order
template <class S = double>
using JetFun = std::function<TaylorJet<S>(double x, int order)>;

template <class S>
TaylorJet<S> jet_derivative(const TaylorJet<S>& j) {
    TaylorJet<S> r(std::max(0, j.order() - 1));
    for (int k = 0; k + 1 <= j.order(); ++k) r.c[k] = S(k + 1) * j.c[k + 1];
    return r;
}

template <class S>
TaylorJet<S> promote(const TaylorJet<double>& j) {
    TaylorJet<S> r(j.order());
    for (int k = 0; k <= j.order(); ++k) r.c[k] = S(j.c[k]);
    return r;
}

inline JetFun<> jet_fun(const Expr& e) {
    return [e](double x, int order) { return e.jet(x, order); };
}

inline JetFun<> jet_fun(const RatFn& f) {
    Expr e = to_expr(f);
    return jet_fun(e);
}

// W' = -phi'/phi from a numeric seed; zeros of phi surface as DomainError
inline JetFun<> superpotential_fn(const JetFun<>& phi) {
    return [phi](double x, int order) {
        TaylorJet<double> p = phi(x, order + 1);
        return -(jet_derivative(p) / p);
    };
}

inline std::function<double(double)> partner_potential_fn(const JetFun<>& wprime, double e0) {
    return [wprime, e0](double x) {
        TaylorJet<double> w = wprime(x, 1);
        return w.value() * w.value() + w.deriv(1) + e0;
    };
}

// (A psi)(x) = psi'(x) + W'(x) psi(x), with jets propagated
template <class S = double>
JetFun<S> intertwine(const JetFun<>& wprime, const JetFun<S>& psi) {
    return [wprime, psi](double x, int order) {
        TaylorJet<S> p = psi(x, order + 1);
        TaylorJet<S> w = promote<S>(wprime(x, order));
        return jet_derivative(p) + w * p;
    };
}

// A^dag psi = -psi' + W' psi
template <class S = double>
JetFun<S> intertwine_dagger(const JetFun<>& wprime, const JetFun<S>& psi) {
    return [wprime, psi](double x, int order) {
        TaylorJet<S> p = psi(x, order + 1);
        TaylorJet<S> w = promote<S>(wprime(x, order));
        return -jet_derivative(p) + w * p;
    };
}

namespace detail {

// adaptive Simpson with absolute tolerance
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double fa, double fm, double fb, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
    double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) < 15 * tol) return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, tol / 2, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, tol / 2, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-10) {
    if (a == b) return 0.0;
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    return adaptive_simpson(f, a, b, fa, fm, fb, tol, 48);
}

}  // namespace detail

enum class SecondSolutionMethod { ClosedFormMonomial, NumericQuadrature };

// psi2(x) = psi1(x) * Int_{x0}^{x} psi1^{-2};  Wronskian(psi1, psi2) = 1
inline JetFun<> second_solution(const JetFun<>& psi1, double x0,
                                SecondSolutionMethod method = SecondSolutionMethod::NumericQuadrature) {
    if (method == SecondSolutionMethod::ClosedFormMonomial)
        throw std::invalid_argument("use second_solution_monomial on the rational form");
    auto inv_sq = [psi1](double t) {
        double v = psi1(t, 0).value();
        if (std::abs(v) < 1e-12) throw ZeroCrossingError(t);
        return 1.0 / (v * v);
    };
    return [psi1, inv_sq, x0](double x, int order) {
        // guard the path: a sign change of psi1 between x0 and x means a zero
        double va = psi1(x0, 0).value(), vb = psi1(x, 0).value();
        if (va * vb <= 0) {
            double lo = std::min(x0, x), hi = std::max(x0, x);
            for (int i = 0; i < 60; ++i) {
                double mid = 0.5 * (lo + hi);
                (psi1(lo, 0).value() * psi1(mid, 0).value() <= 0 ? hi : lo) = mid;
            }
            throw ZeroCrossingError(0.5 * (lo + hi));
        }
        double I0 = detail::integrate(inv_sq, x0, x);
        TaylorJet<double> p = psi1(x, order + 1);
        // I' = psi1^{-2}; integrate its series for the jet of I
        TaylorJet<double> dI = TaylorJet<double>(order >= 1 ? order - 1 : 0, 1.0) / (p * p);
        TaylorJet<double> I(order, I0);
        for (int k = 1; k <= order; ++k) I.c[k] = dI.c[k - 1] / k;
        return p * I;
    };
}

// asymptotic S-matrix composition under one more Darboux step:
// Shat(k) = S(k) (W'(inf) + ik)/(W'(inf) - ik); W'(inf)=inf means factor 1
inline std::function<std::complex<double>(double)> chain_smatrix_compose(
    const std::function<std::complex<double>(double)>& s_prev, double wprime_at_infinity) {
    return [s_prev, wprime_at_infinity](double k) {
        if (std::isinf(wprime_at_infinity)) return s_prev(k);
        std::complex<double> ik(0.0, k);
        return s_prev(k) * (wprime_at_infinity + ik) / (wprime_at_infinity - ik);
    };
}

// grid validation of a numeric seed against its source potential
inline double seed_max_residual(const std::function<double(double)>& v, const JetFun<>& phi,
                                double e0, double lo, double hi, int npts = 50) {
    double worst = 0;
    for (int i = 0; i < npts; ++i) {
        double x = lo + (hi - lo) * (i + 0.5) / npts;
        TaylorJet<double> p = phi(x, 2);
        double scale = std::max(1.0, std::abs(p.value()));
        double r = -p.deriv(2) + (v(x) - e0) * p.value();
        worst = std::max(worst, std::abs(r) / scale);
    }
    return worst;
}

}  // namespace darboux
