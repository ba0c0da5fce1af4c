#pragma once

// Transcendental spectral equations for the confining region (-c, 0) of the
// three-region family.  The equation is constructed, not transcribed: the
// chain intertwiners A_j = D - j/x are applied symbolically to sin(kappa x)
// over the coefficient field Q(kappa), and the boundary conditions (regular
// indicial branch at x -> 0^-, regular branch at the x = -c double pole)
// reduce to a tan kappa = N(kappa)/D(kappa) condition with exact integer
// polynomials.  kappa = k c, so the equation is c-independent.

#include "darboux/darboux.hpp"
#include "darboux/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace darboux {

struct SpectralEquation {
    int n = 0;
    Poly<Rat> N, D;  // quantization: tan(kappa) = N(kappa)/D(kappa)

    // entire cleared form  g = sin(kappa) D - cos(kappa) N : no poles, and a
    // sign change of g brackets exactly one genuine root
    double entire(double kappa) const {
        return std::sin(kappa) * eval_d(D, kappa) - std::cos(kappa) * eval_d(N, kappa);
    }

    // tan-cleared form, kept for reporting (has tan poles)
    double residual(double kappa) const {
        return std::tan(kappa) * eval_d(D, kappa) - eval_d(N, kappa);
    }
};

struct SpectralRoot {
    int index;     // m = 1, 2, ...
    double kappa;  // k_m c
    double energy(double c) const { return (kappa / c) * (kappa / c); }
};

// symbolic construction.  n = 1 has no confining region (the two poles
// coincide at the single pole -c), so it is rejected.
inline SpectralEquation spectral_equation_build(int n) {
    if (n < 2)
        throw std::invalid_argument(
            "n=1: the potential has only two regions and no confining piece");
    using Fk = Ratio<Rat>;   // rational functions of kappa
    using Biv = Ratio<Fk>;   // rational in x over Q(kappa)
    Fk kappa = Fk::X();
    // psi = Rs sin(kappa x) + Rc cos(kappa x), starting from the branch that
    // is regular at the x=0 pole of the final potential
    Biv Rs(Fk(1)), Rc(Fk(0));
    for (int j = 1; j <= n; ++j) {
        Biv over_x(Poly<Fk>(Fk(j)), Poly<Fk>::X());
        Biv ns = Rs.derivative() - Biv(Poly<Fk>(kappa)) * Rc - over_x * Rs;
        Biv nc = Rc.derivative() + Biv(Poly<Fk>(kappa)) * Rs - over_x * Rc;
        Rs = ns;
        Rc = nc;
    }
    // regular branch at the -c double pole of the last step's potential:
    // the pulled-back solution must vanish there.  At x = -1 (c scaled out):
    // -S sin(kappa) + C cos(kappa) = 0, i.e. tan(kappa) = C/S.
    Fk S = Rs(Fk(-1));
    Fk C = Rc(Fk(-1));
    Fk ratio = C / S;
    SpectralEquation eq;
    eq.n = n;
    eq.N = ratio.num;
    eq.D = ratio.den;
    auto scale_poly = [](Poly<Rat>& p, const Rat& s) {
        for (auto& c : p.c) c = c * s;
    };
    // normalize sign so that D(0) > 0 when nonzero, else N leading > 0
    Rat d0 = eq.D.coeff(0);
    if ((d0 != 0 && d0 < 0) || (d0 == 0 && eq.D.leading() < 0)) {
        scale_poly(eq.N, Rat(-1));
        scale_poly(eq.D, Rat(-1));
    }
    return eq;
}

// first `count` roots of the quantization condition, bisected to 1e-12
inline std::vector<SpectralRoot> spectral_roots(const SpectralEquation& eq, int count) {
    std::vector<SpectralRoot> roots;
    // g ~ kappa^{2n+1} at the origin, far below roundoff of the evaluated
    // form for tiny kappa; every genuine root is beyond pi, so start at 1
    double step = 0.02;
    double prev_x = 1.0, prev_g = eq.entire(prev_x);
    for (double x = prev_x + step; (int)roots.size() < count && x < 1e5; x += step) {
        double g = eq.entire(x);
        if (prev_g == 0 || prev_g * g < 0) {
            double lo = prev_x, hi = x, flo = prev_g;
            while (hi - lo > 1e-13) {
                double mid = 0.5 * (lo + hi);
                double fm = eq.entire(mid);
                if (flo * fm <= 0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            roots.push_back({(int)roots.size() + 1, 0.5 * (lo + hi)});
        }
        prev_x = x;
        prev_g = g;
    }
    return roots;
}

// do two quantization conditions tan = N1/D1 and tan = N2/D2 agree?
// (cross-multiplied polynomial identity, immune to common factors)
inline bool spectral_equation_equivalent(const Poly<Rat>& n1, const Poly<Rat>& d1,
                                         const Poly<Rat>& n2, const Poly<Rat>& d2) {
    return (n1 * d2 - n2 * d1).is_zero();
}

}  // namespace darboux
