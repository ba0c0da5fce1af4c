#pragma once

// Registry of the solvable potential families: closed-form evaluators with
// domain decomposition, pole metadata, and asymptotic tail strengths.
//
// Family ids (strings, as used by the CLI):
//   "32"  three-region rational family, params n >= 1, mu > 0
//         ("10" = n=1 member, "22" = n=2 member)
//   "37"  centrifugal n(n+1)/x^2, n >= 0
//   "38"  n(n+1) sec^2 x
//   "39"  -n(n+1) cosh^-2 x
//   "40"  n(n+1) sinh^-2 x
//   "41"  (a + b cos x)/sin^2 x
//   "42"  (3/4)/sin^2 x
//   "44"  (7/4 - 2 cos x)/sin^2 x

#include "darboux/darboux.hpp"
#include "darboux/expr.hpp"
#include "darboux/jet.hpp"
#include "darboux/rational.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace darboux {

enum class PieceKind { ScatteringWithBoundState, Confining, PurelyRepulsive, WholeLine };

inline const char* to_string(PieceKind k) {
    switch (k) {
        case PieceKind::ScatteringWithBoundState: return "scattering-with-bound-state";
        case PieceKind::Confining: return "confining";
        case PieceKind::PurelyRepulsive: return "purely-repulsive";
        case PieceKind::WholeLine: return "whole-line";
    }
    return "?";
}

struct DomainPiece {
    double lo, hi;  // open interval; +-inf allowed
    PieceKind kind;
};

struct PoleInfo {
    double location;
    std::optional<Rat> exact;
    int multiplicity;
    double strength;  // lambda in V ~ lambda/(x-p)^2
};

struct PotentialSpec {
    std::string family;
    int n = 0;
    Rat mu = 0;
    Rat a = 0, b = 0;  // family "41" only

    bool is_rational = false;
    RatFn rational;    // valid when is_rational
    Expr closed_form;  // always valid

    std::function<double(double)> value;
    JetFun<> jets;

    std::vector<DomainPiece> pieces;
    std::vector<PoleInfo> poles;
    // far-field centrifugal strengths l(l+1); NaN when the domain is bounded
    double tail_left = std::numeric_limits<double>::quiet_NaN();
    double tail_right = std::numeric_limits<double>::quiet_NaN();
};

// ---------------------------------------------------------------------------
// three-region rational family

// V = [(n+1)(n+2) x^{4n+2} - 6 mu n(n+1) x^{2n+1} + mu^2 n(n-1)]
//     / [x^2 (mu + x^{2n+1})^2],   templated so mu may live in any field
template <class F>
Ratio<F> three_region_potential(int n, const F& mu) {
    if (n < 1) throw std::invalid_argument("three-region family needs n >= 1");
    Poly<F> num = Poly<F>::monomial(F((n + 1) * (n + 2)), 4 * n + 2) +
                  Poly<F>::monomial(F(-6 * n * (n + 1)) * mu, 2 * n + 1) +
                  Poly<F>(mu * mu * F(n * (n - 1)));
    Poly<F> shifted = Poly<F>::monomial(F(1), 2 * n + 1) + Poly<F>(mu);
    Poly<F> den = Poly<F>::monomial(F(1), 2) * shifted * shifted;
    return Ratio<F>(num, den);
}

// seeds x, x^2, ..., x^n, then mu/x^n + x^{n+1}; chain from V=0 lands on the
// same closed form (tested as an identity)
template <class F>
std::vector<Ratio<F>> three_region_seeds(int n, const F& mu) {
    std::vector<Ratio<F>> seeds;
    for (int k = 1; k <= n; ++k) seeds.push_back(Ratio<F>(Poly<F>::monomial(F(1), k)));
    Ratio<F> last = Ratio<F>(Poly<F>(mu), Poly<F>::monomial(F(1), n)) +
                    Ratio<F>(Poly<F>::monomial(F(1), n + 1));
    seeds.push_back(last);
    return seeds;
}

// zero-energy bound state of the x>0 piece: phi^{-1} = x^n/(mu + x^{2n+1})
template <class F>
Ratio<F> zero_energy_state(int n, const F& mu) {
    if (n < 2)
        throw std::invalid_argument(
            "n=1: the candidate state 1/phi has its pole on the region boundary "
            "and is not normalizable on either piece");
    return Ratio<F>(Poly<F>::monomial(F(1), n),
                    Poly<F>(mu) + Poly<F>::monomial(F(1), 2 * n + 1));
}

// ---------------------------------------------------------------------------

namespace detail {

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

inline PotentialSpec rational_spec(std::string family, int n, const Rat& mu, RatFn v) {
    PotentialSpec s;
    s.family = std::move(family);
    s.n = n;
    s.mu = mu;
    s.is_rational = true;
    s.rational = v;
    s.closed_form = to_expr(v);
    s.value = [v](double x) { return eval_d(v, x); };
    s.jets = jet_fun(v);
    return s;
}

inline PotentialSpec expr_spec(std::string family, int n, Expr e) {
    PotentialSpec s;
    s.family = std::move(family);
    s.n = n;
    s.closed_form = e;
    s.value = [e](double x) { return e(x); };
    s.jets = jet_fun(e);
    return s;
}

}  // namespace detail

inline PotentialSpec catalog_three_region(int n, const Rat& mu) {
    detail::require(n >= 1, "family 32: n >= 1 required");
    detail::require(mu > 0, "family 32: mu > 0 required (mu < 0 moves the pole to x > 0)");
    PotentialSpec s = detail::rational_spec("32", n, mu, three_region_potential<Rat>(n, mu));
    double c = std::pow(to_double(mu), 1.0 / (2 * n + 1));
    const double inf = std::numeric_limits<double>::infinity();
    s.poles.push_back({-c, std::nullopt, 2, 2.0});
    if (mu == 1) s.poles.back().exact = Rat(-1);
    if (n == 1) {
        s.pieces = {{-inf, -c, PieceKind::PurelyRepulsive},
                    {-c, inf, PieceKind::ScatteringWithBoundState}};
    } else {
        s.poles.push_back({0.0, Rat(0), 2, double(n * (n - 1))});
        s.pieces = {{-inf, -c, PieceKind::PurelyRepulsive},
                    {-c, 0.0, PieceKind::Confining},
                    {0.0, inf, PieceKind::ScatteringWithBoundState}};
    }
    s.tail_left = s.tail_right = double((n + 1) * (n + 2));
    return s;
}

inline PotentialSpec catalog_centrifugal(int n) {
    detail::require(n >= 0, "family 37: n >= 0 required");
    const double inf = std::numeric_limits<double>::infinity();
    RatFn v = n == 0 ? RatFn(0)
                     : RatFn(Poly<Rat>(Rat(n * (n + 1))), Poly<Rat>::monomial(Rat(1), 2));
    PotentialSpec s = detail::rational_spec("37", n, 0, v);
    if (n == 0) {
        s.pieces = {{-inf, inf, PieceKind::WholeLine}};
        s.tail_left = s.tail_right = 0.0;
    } else {
        s.poles.push_back({0.0, Rat(0), 2, double(n * (n + 1))});
        s.pieces = {{-inf, 0.0, PieceKind::PurelyRepulsive},
                    {0.0, inf, PieceKind::PurelyRepulsive}};
        s.tail_left = s.tail_right = double(n * (n + 1));
    }
    return s;
}

inline PotentialSpec catalog_sec2(int n) {
    detail::require(n >= 0, "family 38: n >= 0 required");
    Expr x = Expr::var();
    Expr e = Expr::lit(n * (n + 1)) / (cos(x) * cos(x));
    PotentialSpec s = detail::expr_spec("38", n, e);
    // one periodic cell; confining box between adjacent poles of sec^2
    double h = M_PI / 2;
    s.pieces = {{-h, h, n == 0 ? PieceKind::WholeLine : PieceKind::Confining}};
    if (n > 0) {
        s.poles.push_back({-h, std::nullopt, 2, double(n * (n + 1))});
        s.poles.push_back({h, std::nullopt, 2, double(n * (n + 1))});
    }
    return s;
}

inline PotentialSpec catalog_cosh_well(int n) {
    detail::require(n >= 0, "family 39: n >= 0 required");
    Expr x = Expr::var();
    Expr e = Expr::lit(-n * (n + 1)) / (cosh(x) * cosh(x));
    PotentialSpec s = detail::expr_spec("39", n, e);
    const double inf = std::numeric_limits<double>::infinity();
    s.pieces = {{-inf, inf, PieceKind::WholeLine}};
    s.tail_left = s.tail_right = 0.0;
    return s;
}

inline PotentialSpec catalog_sinh_barrier(int n) {
    detail::require(n >= 0, "family 40: n >= 0 required");
    Expr x = Expr::var();
    Expr e = Expr::lit(n * (n + 1)) / (sinh(x) * sinh(x));
    PotentialSpec s = detail::expr_spec("40", n, e);
    const double inf = std::numeric_limits<double>::infinity();
    if (n == 0) {
        s.pieces = {{-inf, inf, PieceKind::WholeLine}};
    } else {
        s.poles.push_back({0.0, Rat(0), 2, double(n * (n + 1))});
        s.pieces = {{-inf, 0.0, PieceKind::PurelyRepulsive},
                    {0.0, inf, PieceKind::PurelyRepulsive}};
    }
    s.tail_left = s.tail_right = 0.0;
    return s;
}

inline PotentialSpec catalog_trig_a(const Rat& a, const Rat& b) {
    Expr x = Expr::var();
    Expr e = (Expr::lit(a) + Expr::lit(b) * cos(x)) / (sin(x) * sin(x));
    PotentialSpec s = detail::expr_spec("41", 0, e);
    s.a = a;
    s.b = b;
    s.pieces = {{0.0, M_PI, PieceKind::Confining}};
    s.poles.push_back({0.0, Rat(0), 2, to_double(a + b)});
    s.poles.push_back({M_PI, std::nullopt, 2, to_double(a - b)});
    return s;
}

inline PotentialSpec catalog_trig_base() {
    PotentialSpec s = catalog_trig_a(Rat(3, 4), Rat(0));
    s.family = "42";
    return s;
}

inline PotentialSpec catalog_trig_partner() {
    PotentialSpec s = catalog_trig_a(Rat(7, 4), Rat(-2));
    s.family = "44";
    return s;
}

struct CatalogParams {
    int n = 1;
    Rat mu = 1;
    Rat a = 0, b = 0;
};

inline PotentialSpec catalog_get(const std::string& family, const CatalogParams& p = {}) {
    if (family == "32" || family == "three-region") return catalog_three_region(p.n, p.mu);
    if (family == "10") return catalog_three_region(1, p.mu);
    if (family == "22") return catalog_three_region(2, p.mu);
    if (family == "37" || family == "centrifugal") return catalog_centrifugal(p.n);
    if (family == "38" || family == "sec2") return catalog_sec2(p.n);
    if (family == "39" || family == "cosh-well") return catalog_cosh_well(p.n);
    if (family == "40" || family == "sinh-barrier") return catalog_sinh_barrier(p.n);
    if (family == "41" || family == "trig-a") return catalog_trig_a(p.a, p.b);
    if (family == "42") return catalog_trig_base();
    if (family == "44" || family == "trig-partner") return catalog_trig_partner();
    throw std::invalid_argument("unknown potential family: " + family);
}

// numeric confirmation of the recorded tail/pole strengths:
// (x-p)^2 V -> strength near each pole, x^2 V -> l(l+1) far out
inline double tail_max_deviation(const PotentialSpec& s) {
    double worst = 0;
    for (const auto& p : s.poles) {
        // averaging the two sides cancels the simple-pole Laurent term; the
        // offset stays moderate so polynomial evaluation does not cancel
        double eps = 1e-4 * std::max(1.0, std::abs(p.location));
        double sum = 0;
        int sides = 0;
        for (double sgn : {-1.0, 1.0}) {
            double x = p.location + sgn * eps;
            bool inside = false;
            for (const auto& piece : s.pieces)
                if (x > piece.lo && x < piece.hi) inside = true;
            if (!inside) continue;
            sum += (x - p.location) * (x - p.location) * s.value(x);
            ++sides;
        }
        if (sides == 0) continue;
        worst = std::max(worst, std::abs(sum / sides - p.strength) /
                                    std::max(1.0, std::abs(p.strength)));
    }
    auto far = [&](double x, double expect) {
        if (std::isnan(expect)) return;
        double got = x * x * s.value(x);
        worst = std::max(worst, std::abs(got - expect) / std::max(1.0, std::abs(expect)));
    };
    if (!s.pieces.empty()) {
        if (std::isinf(s.pieces.front().lo)) far(-1e6, s.tail_left);
        if (std::isinf(s.pieces.back().hi)) far(1e6, s.tail_right);
    }
    return worst;
}

// ---------------------------------------------------------------------------
// golden-ratio structure of the n=1 critical points

struct GoldenExtrema {
    double x_min, x_max;    // abscissae of the local min / max on x > -c
    double v_min, v_max;    // potential values there
    double phi;             // (1+sqrt 5)/2
    double cube_min, cube_max;              // x^3/mu at each extremum
    double cube_min_ref, cube_max_ref;      // 2 - 3/phi and 2 + 3 phi
    double v_min_ref, v_max_ref;            // closed-form values, mu-scaled
};

// critical points of the n=1 potential on x > 0, labeled by curvature.
// the abscissa with cube (2+3 phi) mu carries the local MAXIMUM of V
// (V ~ +0.897 mu^{-2/3}); the cube (2 - 3/phi) mu one the minimum (~ -4.46).
inline GoldenExtrema golden_extrema(const Rat& mu) {
    detail::require(mu > 0, "golden extrema: mu > 0 required");
    RatFn v = three_region_potential<Rat>(1, mu);
    RatFn dv = v.derivative();
    double c = std::cbrt(to_double(mu));
    // both critical cubes lie in (0.14, 6.9) mu, i.e. x in (0.5 c, 1.91 c)
    auto roots = real_roots(dv.num, Rat(c / 8), Rat(8 * c));
    std::vector<double> xs;
    for (const auto& r : roots)
        if (r.location > 0) xs.push_back(r.location);
    if (xs.size() != 2) throw std::logic_error("expected two positive critical points");

    GoldenExtrema g;
    g.phi = (1 + std::sqrt(5.0)) / 2;
    auto curvature = [&](double x) {
        double h = 1e-5 * c;
        return (eval_d(v, x + h) - 2 * eval_d(v, x) + eval_d(v, x - h)) / (h * h);
    };
    double x0 = xs[0], x1 = xs[1];
    if (curvature(x0) < 0) std::swap(x0, x1);  // x0 = min, x1 = max
    g.x_min = x0;
    g.x_max = x1;
    g.v_min = eval_d(v, x0);
    g.v_max = eval_d(v, x1);
    double mud = to_double(mu);
    g.cube_min = x0 * x0 * x0 / mud;
    g.cube_max = x1 * x1 * x1 / mud;
    g.cube_min_ref = 2 - 3 / g.phi;
    g.cube_max_ref = 2 + 3 * g.phi;
    // value at the cube-(2+3 phi) point: 2 phi (2+3 phi)^{1/3} / (1+phi)^2;
    // the other extremum follows under phi -> -1/phi.  scale: V ~ mu^{-2/3}
    double scale = std::pow(mud, -2.0 / 3.0);
    auto vform = [](double phi) {
        return 2 * phi * std::cbrt(2 + 3 * phi) / ((1 + phi) * (1 + phi));
    };
    g.v_max_ref = vform(g.phi) * scale;
    g.v_min_ref = vform(-1 / g.phi) * scale;
    return g;
}

// ---------------------------------------------------------------------------
// trig family via one Darboux step

struct TrigPartnerBuild {
    Expr seed;           // sqrt(sin x) cot(x/2), energy +1/4
    JetFun<> wprime;     // built from the seed, = csc x - (1/2) cot x
    PotentialSpec spec;  // the (7/4 - 2 cos x)/sin^2 x member
    double max_deviation;  // relative deviation from the closed form on a grid
    double seed_energy = 0.25;
};

inline TrigPartnerBuild trig_partner_build() {
    TrigPartnerBuild out;
    Expr x = Expr::var();
    // cot(x/2) = sin x / (1 - cos x)
    Expr cot_half = sin(x) / (Expr::lit(1) - cos(x));
    out.seed = sqrt(sin(x)) * cot_half;
    out.wprime = superpotential_fn(jet_fun(out.seed));
    auto v1 = partner_potential_fn(out.wprime, out.seed_energy);
    out.spec = catalog_trig_partner();
    out.max_deviation = 0;
    for (int i = 1; i < 100; ++i) {
        double p = M_PI * i / 100.0;
        double ref = out.spec.value(p);
        out.max_deviation = std::max(out.max_deviation,
                                     std::abs(v1(p) - ref) / std::max(1.0, std::abs(ref)));
    }
    return out;
}

}  // namespace darboux
