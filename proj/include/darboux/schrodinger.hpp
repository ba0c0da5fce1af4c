#pragma once

// Numerical oracle for -psi'' + V psi = E psi on one domain piece:
// Numerov fourth-order integration, Frobenius (indicial) series starts at
// double-pole endpoints, and bracketed shooting for eigenvalues.

#include "darboux/catalog.hpp"
#include "darboux/jet.hpp"
#include "darboux/rational.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace darboux {

// ---------------------------------------------------------------------------
// Laurent data at a double pole:  V(x0 + s) = lambda/s^2 + w[0]/s + w[1]
//                                             + w[2] s + w[3] s^2 + ...

struct LaurentData {
    double lambda = 0;
    std::vector<double> w;

    double wt(int j) const { return j < (int)w.size() ? w[j] : 0.0; }

    // expansion seen from the other side of the pole (s -> -s)
    LaurentData mirrored() const {
        LaurentData m = *this;
        for (size_t j = 0; j < m.w.size(); ++j)
            if (j % 2 == 0) m.w[j] = -m.w[j];
        return m;
    }
};

namespace detail {

// Taylor-shift a double-coefficient polynomial to powers of (x - p)
inline std::vector<double> taylor_shift(std::vector<double> c, double p) {
    // repeated synthetic division by (x - p)
    int n = (int)c.size();
    for (int k = 0; k < n - 1; ++k)
        for (int i = n - 2; i >= k; --i) c[i] += p * c[i + 1];
    return c;
}

// series of A(s)/B(s) to nterms, B(0) != 0, via jet division
inline std::vector<double> series_divide(const std::vector<double>& a,
                                         const std::vector<double>& b, int nterms) {
    TaylorJet<double> ja(nterms - 1), jb(nterms - 1);
    for (int i = 0; i < nterms; ++i) {
        ja.c[i] = i < (int)a.size() ? a[i] : 0.0;
        jb.c[i] = i < (int)b.size() ? b[i] : 0.0;
    }
    return (ja / jb).c;
}

}  // namespace detail

// expansion of a rational potential at a double pole
inline LaurentData laurent_rational(const RatFn& v, double pole, int nterms = 14) {
    auto to_dbl = [](const Poly<Rat>& p) {
        std::vector<double> c(p.c.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = to_double(p.c[i]);
        return c;
    };
    std::vector<double> num = detail::taylor_shift(to_dbl(v.num), pole);
    std::vector<double> den = detail::taylor_shift(to_dbl(v.den), pole);
    // deflate the double zero; tolerate shift roundoff in the two lowest terms
    double lead = 0;
    for (double d : den) lead = std::max(lead, std::abs(d));
    if (den.size() < 3 || std::abs(den[0]) > 1e-8 * lead || std::abs(den[1]) > 1e-8 * lead)
        throw std::invalid_argument("not a double pole of the rational potential");
    den.erase(den.begin(), den.begin() + 2);
    std::vector<double> e = detail::series_divide(num, den, nterms + 2);
    LaurentData L;
    L.lambda = e[0];
    L.w.assign(e.begin() + 1, e.end());
    return L;
}

// expansion of (a + b cos s)/sin^2 s  (covers every trig pole in the catalog)
inline LaurentData laurent_trig(double a, double b, int nterms = 14) {
    int m = nterms + 4;
    // g = sin(s)/s and cos(s) series
    std::vector<double> g(m, 0.0), cs(m, 0.0);
    double fact = 1;
    for (int k = 0; k < m; ++k) {
        if (k > 0) fact *= k;
        if (k % 2 == 0) cs[k] = (k % 4 == 0 ? 1.0 : -1.0) / fact;
    }
    double ofact = 1;
    for (int k = 0; k < m; ++k) {
        ofact = 1;
        for (int j = 2; j <= 2 * k + 1; ++j) ofact *= j;
        if (2 * k < m) g[2 * k] = (k % 2 == 0 ? 1.0 : -1.0) / ofact;
    }
    // (a + b cos s) / g^2, then the 1/s^2 prefactor
    TaylorJet<double> jg(m - 1), jn(m - 1);
    for (int i = 0; i < m; ++i) {
        jg.c[i] = g[i];
        jn.c[i] = (i == 0 ? a : 0.0) + b * cs[i];
    }
    std::vector<double> e = (jn / (jg * jg)).c;
    LaurentData L;
    L.lambda = e[0];
    L.w.assign(e.begin() + 1, e.begin() + 1 + nterms + 1);
    return L;
}

// expansion of q/sinh^2 s at s=0
inline LaurentData laurent_sinh(double q, int nterms = 14) {
    int m = nterms + 4;
    std::vector<double> g(m, 0.0);  // sinh(s)/s
    for (int k = 0; 2 * k < m; ++k) {
        double ofact = 1;
        for (int j = 2; j <= 2 * k + 1; ++j) ofact *= j;
        g[2 * k] = 1.0 / ofact;
    }
    TaylorJet<double> jg(m - 1), jn(m - 1, q);
    for (int i = 0; i < m; ++i) jg.c[i] = g[i];
    std::vector<double> e = (jn / (jg * jg)).c;
    LaurentData L;
    L.lambda = e[0];
    L.w.assign(e.begin() + 1, e.begin() + 1 + nterms + 1);
    return L;
}

// expansion of the potential at one of its recorded poles, as seen from the
// interval to the RIGHT of the pole (use .mirrored() for the other side)
inline LaurentData laurent_at_pole(const PotentialSpec& s, const PoleInfo& p,
                                   int nterms = 14) {
    if (s.is_rational) return laurent_rational(s.rational, p.location, nterms);
    double a = to_double(s.a), b = to_double(s.b);
    int q = s.n * (s.n + 1);
    if (s.family == "38") return laurent_trig(q, 0, nterms);          // sec^2 at +-pi/2
    if (s.family == "40") return laurent_sinh(q, nterms);             // sinh^-2 at 0
    if (s.family == "41" || s.family == "42" || s.family == "44") {
        if (std::abs(p.location) < 1e-9) return laurent_trig(a, b, nterms);
        return laurent_trig(a, -b, nterms);  // pole at pi: cos(pi - s) = -cos s
    }
    throw std::invalid_argument("no Laurent data for family " + s.family);
}

// ---------------------------------------------------------------------------
// Frobenius series around a double-pole endpoint (regular branch)

struct FrobeniusSeries {
    double alpha;            // psi ~ s^alpha
    std::vector<double> c;   // c[0] = 1

    // value and x-derivative at offset s > 0 from the pole
    std::pair<double, double> eval(double s) const {
        double f = 0, df = 0, sm = 1;
        for (size_t m = 0; m < c.size(); ++m) {
            f += c[m] * sm;
            df += c[m] * (alpha + m) * sm;
            sm *= s;
        }
        double pa = std::pow(s, alpha);
        return {pa * f, pa / s * df};
    }
};

inline FrobeniusSeries frobenius_series(const LaurentData& L, double E, int nterms = 18) {
    double disc = 1 + 4 * L.lambda;
    if (disc < 0)
        throw std::invalid_argument("pole strength below the -1/4 oscillatory threshold");
    FrobeniusSeries f;
    f.alpha = (1 + std::sqrt(disc)) / 2;
    f.c.assign(nterms + 1, 0.0);
    f.c[0] = 1;
    auto wt = [&](int j) {  // j indexes s^{j-1} in V - E
        double v = L.wt(j);
        if (j == 1) v -= E;
        return v;
    };
    for (int m = 1; m <= nterms; ++m) {
        double rhs = 0;
        for (int i = 0; i < m; ++i) rhs += wt(m - 1 - i) * f.c[i];
        f.c[m] = rhs / (m * (m + 2 * f.alpha - 1));
    }
    return f;
}

// ---------------------------------------------------------------------------
// Numerov integration

template <class S = double>
struct Solution {
    std::vector<double> x;
    std::vector<S> psi;
    double log_scale = 0;  // true psi = stored psi * exp(log_scale)
    int rescale_events = 0;

    // fourth-order derivative at node i (one-sided near the ends; h is signed)
    S deriv(size_t i) const {
        size_t n = x.size();
        if (n < 5) throw std::logic_error("too few points for a derivative");
        double h = x[1] - x[0];
        if (i >= 2 && i + 2 < n)
            return (-psi[i + 2] + 8.0 * psi[i + 1] - 8.0 * psi[i - 1] + psi[i - 2]) /
                   (12.0 * h);
        if (i < 2)
            return (-25.0 * psi[i] + 48.0 * psi[i + 1] - 36.0 * psi[i + 2] +
                    16.0 * psi[i + 3] - 3.0 * psi[i + 4]) /
                   (12.0 * h);
        return (25.0 * psi[i] - 48.0 * psi[i - 1] + 36.0 * psi[i - 2] -
                16.0 * psi[i - 3] + 3.0 * psi[i - 4]) /
               (12.0 * h);
    }
};

// integrate -psi'' + V psi = E psi from x0 with signed step h for n points,
// seeded by the first two values
template <class S = double>
Solution<S> numerov_integrate(const std::function<double(double)>& V, double E,
                              double x0, double h, int n, S psi0, S psi1) {
    Solution<S> sol;
    sol.x.reserve(n);
    sol.psi.reserve(n);
    auto f = [&](double x) { return E - V(x); };  // psi'' = -f psi
    double h2 = h * h / 12.0;
    sol.x.push_back(x0);
    sol.psi.push_back(psi0);
    if (n == 1) return sol;
    sol.x.push_back(x0 + h);
    sol.psi.push_back(psi1);
    double fprev = f(x0), fcur = f(x0 + h);
    for (int i = 2; i < n; ++i) {
        double xn = x0 + i * h;
        double fn = f(xn);
        S next = (2.0 * sol.psi[i - 1] * (1 - 5 * h2 * fcur) -
                  sol.psi[i - 2] * (1 + h2 * fprev)) /
                 (1 + h2 * fn);
        sol.x.push_back(xn);
        sol.psi.push_back(next);
        fprev = fcur;
        fcur = fn;
        if (std::abs(next) > 1e120) {
            double scale = std::abs(next);
            for (auto& v : sol.psi) v /= scale;
            sol.log_scale += std::log(scale);
            ++sol.rescale_events;
        }
    }
    return sol;
}

inline int count_nodes(const Solution<double>& s, size_t skip = 1) {
    int nodes = 0;
    double prev = 0;
    for (size_t i = skip; i + skip < s.x.size(); ++i) {
        double v = s.psi[i];
        if (v == 0) continue;
        if (prev != 0 && v * prev < 0) ++nodes;
        prev = v;
    }
    return nodes;
}

// ---------------------------------------------------------------------------
// shooting

struct PieceEndpoint {
    double x = 0;           // pole location or numeric cutoff
    bool indicial = false;  // start with the Frobenius regular branch
    LaurentData laurent;    // required when indicial (as seen from inside)
    double inset = 0.05;    // offset of the first grid point from the pole
};

// endpoint helpers ----------------------------------------------------------

inline PieceEndpoint indicial_endpoint(const PotentialSpec& spec, double pole_location,
                                       bool interval_is_right_of_pole,
                                       double inset = 0.05) {
    for (const auto& p : spec.poles) {
        if (std::abs(p.location - pole_location) > 1e-9) continue;
        PieceEndpoint e;
        e.x = p.location;
        e.indicial = true;
        e.laurent = laurent_at_pole(spec, p);
        if (!interval_is_right_of_pole) e.laurent = e.laurent.mirrored();
        e.inset = inset;
        return e;
    }
    throw std::invalid_argument("no recorded pole at that location");
}

inline PieceEndpoint cutoff_endpoint(double x) {
    PieceEndpoint e;
    e.x = x;
    return e;
}

struct BoundState {
    double energy = 0;
    std::vector<double> x, psi;  // normalized
    int nodes = 0;
    double norm = 1;
};

namespace detail {

struct Shoot {
    std::function<double(double)> V;
    PieceEndpoint left, right;
    double h;
    double xl, xr;  // first/last usable grid points

    Shoot(std::function<double(double)> v, PieceEndpoint l, PieceEndpoint r, double step)
        : V(std::move(v)), left(l), right(r), h(step) {
        xl = left.x + (left.indicial ? left.inset : 0.0);
        xr = right.x - (right.indicial ? right.inset : 0.0);
        if (xr <= xl) throw std::invalid_argument("empty shooting interval");
    }

    std::pair<double, double> start_left(double E) const {
        if (left.indicial) {
            auto fs = frobenius_series(left.laurent, E);
            return fs.eval(left.inset);
        }
        // decaying (or hard-wall) start at a numeric cutoff
        double kap = std::sqrt(std::max(V(left.x) - E, 1e-12));
        return {1.0, kap};
    }

    // endpoint Laurent data is always "as seen from inside the interval", in
    // the coordinate u = distance from the pole; here d/dx = -d/du
    std::pair<double, double> start_right(double E) const {
        if (right.indicial) {
            auto fs = frobenius_series(right.laurent, E);
            auto [v, d] = fs.eval(right.inset);
            return {v, -d};
        }
        double kap = std::sqrt(std::max(V(right.x) - E, 1e-12));
        return {1.0, -kap};
    }

    // full left-to-right sweep, for node counting
    Solution<double> sweep(double E) const {
        int n = (int)std::ceil((xr - xl) / h) + 1;
        double step = (xr - xl) / (n - 1);
        auto [v0, d0] = start_left(E);
        // second value from the series when available, else Taylor
        double v1;
        if (left.indicial)
            v1 = frobenius_series(left.laurent, E).eval(left.inset + step).first;
        else
            v1 = v0 + step * d0 + 0.5 * step * step * (V(xl) - E) * v0;
        return numerov_integrate<double>(V, E, xl, step, n, v0, v1);
    }

    // log-derivative mismatch at xm; normalized so a sign change brackets
    // an eigenvalue
    double mismatch(double E, double xm) const {
        int nl = std::max(6, (int)std::ceil((xm - xl) / h) + 1);
        double hl = (xm - xl) / (nl - 1);
        auto [lv0, ld0] = start_left(E);
        double lv1 = left.indicial
                         ? frobenius_series(left.laurent, E).eval(left.inset + hl).first
                         : lv0 + hl * ld0 + 0.5 * hl * hl * (V(xl) - E) * lv0;
        auto L = numerov_integrate<double>(V, E, xl, hl, nl, lv0, lv1);

        int nr = std::max(6, (int)std::ceil((xr - xm) / h) + 1);
        double hr = (xr - xm) / (nr - 1);
        auto [rv0, rd0] = start_right(E);
        double rv1 =
            right.indicial
                ? frobenius_series(right.laurent, E).eval(right.inset + hr).first
                : rv0 - hr * rd0 + 0.5 * hr * hr * (V(xr) - E) * rv0;
        auto R = numerov_integrate<double>(V, E, xr, -hr, nr, rv0, rv1);

        double lpsi = L.psi.back(), ldpsi = L.deriv(L.x.size() - 1);
        double rpsi = R.psi.back(), rdpsi = R.deriv(R.x.size() - 1);
        // Wronskian of the two normalized pieces
        return (ldpsi * rpsi - rdpsi * lpsi) /
               (std::abs(lpsi * rpsi) + std::abs(ldpsi * rdpsi) + 1e-300);
    }

    BoundState assemble(double E, double xm) const {
        int nl = std::max(6, (int)std::ceil((xm - xl) / h) + 1);
        double hl = (xm - xl) / (nl - 1);
        auto [lv0, ld0] = start_left(E);
        double lv1 = left.indicial
                         ? frobenius_series(left.laurent, E).eval(left.inset + hl).first
                         : lv0 + hl * ld0 + 0.5 * hl * hl * (V(xl) - E) * lv0;
        auto L = numerov_integrate<double>(V, E, xl, hl, nl, lv0, lv1);

        int nr = std::max(6, (int)std::ceil((xr - xm) / h) + 1);
        double hr = (xr - xm) / (nr - 1);
        auto [rv0, rd0] = start_right(E);
        double rv1 =
            right.indicial
                ? frobenius_series(right.laurent, E).eval(right.inset + hr).first
                : rv0 - hr * rd0 + 0.5 * hr * hr * (V(xr) - E) * rv0;
        auto R = numerov_integrate<double>(V, E, xr, -hr, nr, rv0, rv1);

        double scale = L.psi.back() / R.psi.back();
        BoundState b;
        b.energy = E;
        for (size_t i = 0; i < L.x.size(); ++i) {
            b.x.push_back(L.x[i]);
            b.psi.push_back(L.psi[i]);
        }
        for (size_t i = R.x.size() - 1; i-- > 0;) {
            b.x.push_back(R.x[i]);
            b.psi.push_back(R.psi[i] * scale);
        }
        double nrm2 = 0;
        for (size_t i = 0; i + 1 < b.x.size(); ++i)
            nrm2 += 0.5 * (b.psi[i] * b.psi[i] + b.psi[i + 1] * b.psi[i + 1]) *
                    (b.x[i + 1] - b.x[i]);
        b.norm = std::sqrt(nrm2);
        double sgn = 1;
        for (double v : b.psi)
            if (std::abs(v) > 1e-12 * b.norm) {
                sgn = v > 0 ? 1 : -1;
                break;
            }
        for (auto& v : b.psi) v *= sgn / b.norm;
        Solution<double> tmp;
        tmp.x = b.x;
        tmp.psi = b.psi;
        b.nodes = count_nodes(tmp);
        return b;
    }
};

}  // namespace detail

// bracketed eigenvalue search: node-count bisection isolates each level, then
// Wronskian-mismatch bisection refines to relative ~1e-10.  No Newton steps,
// so no level can be skipped.
inline std::vector<BoundState> shoot_eigen(const std::function<double(double)>& V,
                                           const PieceEndpoint& left,
                                           const PieceEndpoint& right, double elo,
                                           double ehi, int count, double h = 1e-3,
                                           double match_x =
                                               std::numeric_limits<double>::quiet_NaN()) {
    detail::Shoot sh(V, left, right, h);
    double xm = match_x;
    if (std::isnan(xm)) {
        // match where the potential is deepest; midpoint as tie-break
        xm = 0.5 * (sh.xl + sh.xr);
        double best = V(xm);
        for (int i = 1; i < 64; ++i) {
            double x = sh.xl + (sh.xr - sh.xl) * i / 64.0;
            if (V(x) < best) {
                best = V(x);
                xm = x;
            }
        }
    }
    auto nodes_at = [&](double E) { return count_nodes(sh.sweep(E)); };
    int n_lo = nodes_at(elo);
    int n_hi = nodes_at(ehi);
    std::vector<BoundState> out;
    for (int m = n_lo + 1; m <= std::min(n_hi, n_lo + count); ++m) {
        // the node count of the sweep jumps from m-1 to m near the m-th
        // eigenvalue; with finite insets the jump is biased, so it only
        // isolates the level
        double a = elo, b = ehi;
        while (b - a > 1e-6 * (std::abs(a) + std::abs(b) + 1)) {
            double mid = 0.5 * (a + b);
            (nodes_at(mid) >= m ? b : a) = mid;
        }
        double J = 0.5 * (a + b);
        // expand around the jump until the mismatch changes sign
        double width = std::max(b - a, 1e-9 * (std::abs(J) + 1));
        double lo = J - width, hi = J + width;
        double flo = sh.mismatch(lo, xm), fhi = sh.mismatch(hi, xm);
        while (flo * fhi > 0 && width < 0.1 * (std::abs(J) + 1)) {
            width *= 2;
            lo = std::max(elo, J - width);
            hi = std::min(ehi, J + width);
            flo = sh.mismatch(lo, xm);
            fhi = sh.mismatch(hi, xm);
        }
        double E = J;
        if (flo * fhi <= 0) {
            for (int it = 0; it < 80 && hi - lo > 1e-13 * (std::abs(lo) + 1); ++it) {
                double mid = 0.5 * (lo + hi);
                double fm = sh.mismatch(mid, xm);
                if (flo * fm <= 0) {
                    hi = mid;
                    fhi = fm;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            E = 0.5 * (lo + hi);
        }
        out.push_back(sh.assemble(E, xm));
        if ((int)out.size() == count) break;
    }
    return out;
}

// normalized E=0 bound state of the x>0 piece of the three-region family
inline BoundState zero_energy_bound_state(int n, const Rat& mu, double xmax = 60,
                                          int samples = 4000) {
    RatFn psi = zero_energy_state<Rat>(n, mu);  // throws for n=1
    RatFn v = three_region_potential<Rat>(n, mu);
    if (!schrodinger_residual(v, psi, Rat(0)).is_zero())
        throw std::logic_error("zero-energy state failed the exact residual check");
    BoundState b;
    b.energy = 0;
    for (int i = 1; i <= samples; ++i) {
        double x = xmax * i / samples;
        b.x.push_back(x);
        b.psi.push_back(eval_d(psi, x));
    }
    double nrm2 = 0;
    for (size_t i = 0; i + 1 < b.x.size(); ++i)
        nrm2 += 0.5 * (b.psi[i] * b.psi[i] + b.psi[i + 1] * b.psi[i + 1]) *
                (b.x[i + 1] - b.x[i]);
    b.norm = std::sqrt(nrm2);
    for (auto& p : b.psi) p /= b.norm;
    b.nodes = 0;
    return b;
}

}  // namespace darboux
