#pragma once

// KdV connection of the rational family.  The evolution u_t = 6 u u_x - u_xxx
// is checked as an exact identity over the bivariate field Q(t)(x): residuals
// are rational functions that must cancel to the zero polynomial, not small
// numbers.  The time slice t = mu/12 reproduces the one-step rational
// potential, tying the deformation parameter mu to KdV time.

#include "darboux/catalog.hpp"
#include "darboux/expr.hpp"
#include "darboux/rational.hpp"

#include <cmath>
#include <vector>

namespace darboux {

using TimeField = Ratio<Rat>;        // rational functions of t
using SpaceTime = Ratio<TimeField>;  // rational in x with Q(t) coefficients

// d/dt, applied coefficient-wise in x
inline Poly<TimeField> t_derivative(const Poly<TimeField>& p) {
    std::vector<TimeField> c;
    c.reserve(p.c.size());
    for (const auto& q : p.c) c.push_back(q.derivative());
    return Poly<TimeField>(c);
}

inline SpaceTime t_derivative(const SpaceTime& f) {
    return SpaceTime(t_derivative(f.num) * f.den - f.num * t_derivative(f.den),
                     f.den * f.den);
}

// u_t - 6 u u_x + u_xxx; identically zero iff u solves the flow
inline SpaceTime kdv_residual(const SpaceTime& u) {
    SpaceTime ux = u.derivative();
    SpaceTime uxxx = ux.derivative().derivative();
    return t_derivative(u) - SpaceTime(Poly<TimeField>(TimeField(6))) * u * ux + uxxx;
}

// u = 6x(x^3 - 24t)/(x^3 + 12t)^2, the rational two-pole solution
inline SpaceTime kdv_rational_solution() {
    TimeField t = TimeField::X();
    Poly<TimeField> num = Poly<TimeField>::monomial(TimeField(6), 4) +
                          Poly<TimeField>::monomial(TimeField(-144) * t, 1);
    Poly<TimeField> root = Poly<TimeField>::monomial(TimeField(1), 3) +
                           Poly<TimeField>(TimeField(12) * t);
    return SpaceTime(num, root * root);
}

// u = 2/x^2, the stationary one-pole solution
inline SpaceTime kdv_static_solution() {
    return SpaceTime(Poly<TimeField>(TimeField(2)), Poly<TimeField>::monomial(TimeField(1), 2));
}

// lambda^2 u(lambda x, lambda^3 t): the KdV scaling orbit
inline SpaceTime kdv_scale(const SpaceTime& u, const Rat& lambda) {
    Poly<Rat> t_sub{Rat(0), lambda * lambda * lambda};
    auto sub_t = [&](const Poly<TimeField>& p) {
        std::vector<TimeField> c;
        for (const auto& q : p.c) c.push_back(q.compose(t_sub));
        return Poly<TimeField>(c);
    };
    Poly<TimeField> x_sub{TimeField(0), TimeField(lambda)};
    SpaceTime scaled(sub_t(u.num).compose(x_sub), sub_t(u.den).compose(x_sub));
    return SpaceTime(Poly<TimeField>(TimeField(lambda * lambda))) * scaled;
}

// substitute t = mu/12; the result is rational in x over Q(mu)
inline Ratio<Ratio<Rat>> kdv_time_slice(const SpaceTime& u) {
    Poly<Rat> sub{Rat(0), Rat(1, 12)};
    auto map = [&](const Poly<TimeField>& p) {
        std::vector<Ratio<Rat>> c;
        for (const auto& q : p.c) c.push_back(q.compose(sub));
        return Poly<Ratio<Rat>>(c);
    };
    return Ratio<Ratio<Rat>>(map(u.num), map(u.den));
}

// single travelling sech^2 depression with speed 4 kappa^2
inline Expr kdv_soliton(const Rat& kappa, const Rat& t) {
    Expr x = Expr::var();
    Rat k2 = kappa * kappa;
    Expr arg = Expr::lit(kappa) * (x - Expr::lit(Rat(4) * k2 * t));
    return Expr::lit(Rat(-2) * k2) / (cosh(arg) * cosh(arg));
}

// max |u_t - 6 u u_x + u_xxx| on a grid, using the travelling-wave identity
// u_t = -4 kappa^2 u_x and exact jet derivatives in x
inline double kdv_soliton_residual(const Rat& kappa, const Rat& t, double lo,
                                   double hi, int npts = 100) {
    Expr u = kdv_soliton(kappa, t);
    double k2 = to_double(kappa * kappa);
    double worst = 0;
    for (int i = 0; i < npts; ++i) {
        double x = lo + (hi - lo) * i / (npts - 1);
        TaylorJet<double> j = u.jet(x, 3);
        double r = -4 * k2 * j.deriv(1) - 6 * j.deriv(0) * j.deriv(1) + j.deriv(3);
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

}  // namespace darboux
