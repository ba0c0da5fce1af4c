#pragma once

// Exact univariate polynomial / rational-function arithmetic over a field.
// The coefficient field is a template parameter so the same code serves
//   Ratio<Rat>                rational functions of x over Q
//   Ratio<Ratio<Rat>>         rational functions of x over Q(t) (or Q(mu), Q(kappa))
// All values are immutable after construction and canonically normalized:
// gcd(num,den)=1 and den monic.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace darboux {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline Rat rat_pow(Rat base, long e) {
    if (e < 0) { base = Rat(denominator(base), numerator(base)); e = -e; }
    Rat out = 1;
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

struct PoleError : std::runtime_error {
    double location;
    explicit PoleError(double x)
        : std::runtime_error("evaluation at pole x=" + std::to_string(x)), location(x) {}
};

struct DivisionByZeroError : std::runtime_error {
    DivisionByZeroError() : std::runtime_error("division by zero rational function") {}
};

// ---------------------------------------------------------------------------
// Poly<F>: dense univariate polynomial, coefficients ascending.  The zero
// polynomial has an empty coefficient vector (degree() == -1).

template <class F>
struct Poly {
    std::vector<F> c;

    Poly() = default;
    Poly(const F& v) {
        if (!(v == F(0))) c.push_back(v);
    }
    Poly(int v) : Poly(F(v)) {}
    Poly(std::vector<F> cs) : c(std::move(cs)) { trim(); }
    Poly(std::initializer_list<F> cs) : c(cs) { trim(); }

    static Poly X() { return Poly(std::vector<F>{F(0), F(1)}); }
    // x^k with coefficient a
    static Poly monomial(const F& a, int k) {
        std::vector<F> cs(k + 1, F(0));
        cs[k] = a;
        return Poly(std::move(cs));
    }

    void trim() {
        while (!c.empty() && c.back() == F(0)) c.pop_back();
    }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const F& leading() const { return c.back(); }
    F coeff(int k) const { return (k >= 0 && k < (int)c.size()) ? c[k] : F(0); }

    bool operator==(const Poly& o) const { return c == o.c; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c) v = F(0) - v;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<F> r(std::max(a.c.size(), b.c.size()), F(0));
        for (size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] + b.c[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<F> r(a.c.size() + b.c.size() - 1, F(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r[i + j] = r[i + j] + a.c[i] * b.c[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const F& s, const Poly& p) {
        Poly r = p;
        for (auto& v : r.c) v = s * v;
        r.trim();
        return r;
    }
    friend Poly operator*(const Poly& p, const F& s) { return s * p; }

    // d/dx
    Poly derivative() const {
        if (c.size() <= 1) return Poly();
        std::vector<F> r(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) r[i - 1] = F((int)i) * c[i];
        return Poly(std::move(r));
    }

    // apply fn to every coefficient (e.g. an inner-variable derivative)
    template <class Fn>
    Poly map_coeffs(Fn fn) const {
        std::vector<F> r(c.size());
        for (size_t i = 0; i < c.size(); ++i) r[i] = fn(c[i]);
        return Poly(std::move(r));
    }

    F operator()(const F& x) const {
        F acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // Horner with a coefficient conversion, e.g. Rat -> double
    template <class T, class Conv>
    T eval_conv(const T& x, Conv conv) const {
        T acc{};
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + conv(*it);
        return acc;
    }

    // substitute q for the variable
    Poly compose(const Poly& q) const {
        Poly acc;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + Poly(*it);
        return acc;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        F inv = F(1) / leading();
        return inv * *this;
    }
};

template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw DivisionByZeroError();
    Poly<F> q, r = a;
    q.c.assign(std::max<int>(0, a.degree() - b.degree() + 1), F(0));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        F coef = r.leading() / b.leading();
        int shift = r.degree() - b.degree();
        q.c[shift] = coef;
        r = r - Poly<F>::monomial(coef, shift) * b;
    }
    q.trim();
    return {q, r};
}

template <class F>
Poly<F> operator/(const Poly<F>& a, const Poly<F>& b) {
    return divmod(a, b).first;
}
template <class F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
    return divmod(a, b).second;
}

// monic gcd via Euclid
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> r = (a % b).monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// ---------------------------------------------------------------------------
// Ratio<F>: canonical rational function num/den, gcd-reduced, den monic.

template <class F>
struct Ratio {
    Poly<F> num, den;

    Ratio() : num(), den(F(1)) {}
    Ratio(const F& v) : num(v), den(F(1)) {}
    Ratio(int v) : num(F(v)), den(F(1)) {}
    Ratio(Poly<F> n) : num(std::move(n)), den(F(1)) {}
    Ratio(Poly<F> n, Poly<F> d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    static Ratio X() { return Ratio(Poly<F>::X()); }

    void normalize() {
        if (den.is_zero()) throw DivisionByZeroError();
        if (num.is_zero()) {
            den = Poly<F>(F(1));
            return;
        }
        Poly<F> g = gcd(num, den);
        if (g.degree() > 0) {
            num = num / g;
            den = den / g;
        }
        F inv = F(1) / den.leading();
        num = inv * num;
        den = inv * den;
    }

    bool is_zero() const { return num.is_zero(); }

    bool operator==(const Ratio& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Ratio& o) const { return !(*this == o); }

    Ratio operator-() const {
        Ratio r = *this;
        r.num = -r.num;
        return r;
    }

    friend Ratio operator+(const Ratio& a, const Ratio& b) {
        return Ratio(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Ratio operator-(const Ratio& a, const Ratio& b) { return a + (-b); }
    friend Ratio operator*(const Ratio& a, const Ratio& b) {
        return Ratio(a.num * b.num, a.den * b.den);
    }
    friend Ratio operator/(const Ratio& a, const Ratio& b) {
        if (b.is_zero()) throw DivisionByZeroError();
        return Ratio(a.num * b.den, a.den * b.num);
    }

    // d/dx by the quotient rule
    Ratio derivative() const {
        return Ratio(num.derivative() * den - num * den.derivative(), den * den);
    }

    // derivative with respect to a coefficient-level variable
    template <class Fn>
    Ratio derivative_coeffs(Fn inner_d) const {
        Poly<F> dn = num.map_coeffs(inner_d), dd = den.map_coeffs(inner_d);
        return Ratio(dn * den - num * dd, den * den);
    }

    // exact evaluation; throws PoleError at denominator zeros
    F operator()(const F& x) const {
        F d = den(x);
        if (d == F(0)) throw pole_error_at(x);
        return num(x) / d;
    }

    // substitute a polynomial for the variable
    Ratio compose(const Poly<F>& q) const { return Ratio(num.compose(q), den.compose(q)); }

  private:
    static PoleError pole_error_at(const F& x) {
        if constexpr (std::is_same_v<F, Rat>)
            return PoleError(to_double(x));
        else
            return PoleError(std::numeric_limits<double>::quiet_NaN());
    }
};

// Floating evaluation of a Q-coefficient polynomial / rational function.
inline double eval_d(const Poly<Rat>& p, double x) {
    return p.eval_conv(x, [](const Rat& r) { return to_double(r); });
}

inline double eval_d(const Ratio<Rat>& f, double x) {
    double d = eval_d(f.den, x);
    if (d == 0.0) throw PoleError(x);
    return eval_d(f.num, x) / d;
}

using RatFn = Ratio<Rat>;

// ---------------------------------------------------------------------------
// printing (debug / CLI)

inline std::string to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

template <class F>
std::string to_string(const Poly<F>& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= p.degree(); ++k) {
        if (p.coeff(k) == F(0)) continue;
        if (!first) os << " + ";
        os << "(" << to_string(p.coeff(k)) << ")";
        if (k >= 1) os << "*x^" << k;
        first = false;
    }
    return os.str();
}

template <class F>
std::string to_string(const Ratio<F>& f) {
    return "[" + to_string(f.num) + "] / [" + to_string(f.den) + "]";
}

// ---------------------------------------------------------------------------
// Real-root machinery over Q: square-free decomposition (Yun), Sturm chains,
// bisection refinement, exact-rational snap-back.  Used for pole bookkeeping
// and for the extrema of the rational potentials.

inline std::vector<std::pair<Poly<Rat>, int>> squarefree_decomposition(const Poly<Rat>& p) {
    std::vector<std::pair<Poly<Rat>, int>> out;
    if (p.degree() < 1) return out;
    Poly<Rat> a = p.monic();
    Poly<Rat> da = a.derivative();
    Poly<Rat> g = gcd(a, da);
    if (g.degree() == 0) {
        out.push_back({a, 1});
        return out;
    }
    Poly<Rat> b = a / g;
    Poly<Rat> c = da / g;
    Poly<Rat> d = c - b.derivative();
    int mult = 1;
    while (b.degree() > 0) {
        Poly<Rat> f = gcd(b, d);
        if (f.degree() > 0) out.push_back({f.monic(), mult});
        b = b / f;
        c = d / f;
        d = c - b.derivative();
        ++mult;
    }
    return out;
}

inline int sign_of(const Rat& r) { return r == 0 ? 0 : (r < 0 ? -1 : 1); }

inline std::vector<Poly<Rat>> sturm_chain(const Poly<Rat>& p) {
    std::vector<Poly<Rat>> chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (!chain.back().is_zero()) {
        Poly<Rat> r = chain[chain.size() - 2] % chain.back();
        chain.push_back(-r);
    }
    chain.pop_back();
    return chain;
}

inline int sturm_variations(const std::vector<Poly<Rat>>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sign_of(q(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// number of distinct real roots in (lo, hi]
inline int sturm_count(const std::vector<Poly<Rat>>& chain, const Rat& lo, const Rat& hi) {
    return sturm_variations(chain, lo) - sturm_variations(chain, hi);
}

inline BigInt rat_floor(const Rat& x) {
    BigInt n = numerator(x), d = denominator(x);
    BigInt q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

namespace detail {
// simplest rational in [x, y] for x <= y (continued-fraction descent)
inline Rat simplest_between(const Rat& x, const Rat& y, int depth = 0) {
    BigInt fl = rat_floor(x);
    Rat frac = x - Rat(fl);
    if (frac == 0) return x;
    if (Rat(fl + 1) <= y) return Rat(fl + 1);
    if (depth > 256) return x;
    return Rat(fl) + Rat(1) / simplest_between(Rat(1) / (y - Rat(fl)), Rat(1) / frac, depth + 1);
}
}  // namespace detail

// simplest rational in [lo,hi]; nullopt when its denominator exceeds maxden
inline std::optional<Rat> simplest_rational_in(const Rat& lo, const Rat& hi,
                                               const BigInt& maxden = BigInt(1000000)) {
    if (lo > hi) return std::nullopt;
    Rat r = detail::simplest_between(lo, hi);
    if (denominator(r) > maxden) return std::nullopt;
    return r;
}

struct RealRoot {
    double location = 0.0;
    std::optional<Rat> exact;  // set when the root is a (small) rational
    int multiplicity = 1;
};

// real roots of a square-free polynomial in [lo, hi], refined to width `tol`
inline std::vector<RealRoot> real_roots_squarefree(const Poly<Rat>& p, Rat lo, Rat hi,
                                                   const Rat& tol = Rat(1, BigInt("1000000000000"))) {
    std::vector<RealRoot> out;
    if (p.degree() < 1) return out;
    // nudge endpoints off roots
    auto chain = sturm_chain(p);
    Rat eps = tol / 16;
    while (p(lo) == 0) lo -= eps;
    while (p(hi) == 0) hi += eps;
    std::vector<std::pair<Rat, Rat>> work{{lo, hi}}, isolated;
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        int cnt = sturm_count(chain, a, b);
        if (cnt == 0) continue;
        if (cnt == 1) {
            isolated.push_back({a, b});
            continue;
        }
        Rat mid = (a + b) / 2;
        while (p(mid) == 0) mid += (b - a) / 64;
        work.push_back({a, mid});
        work.push_back({mid, b});
    }
    for (auto& [a, b] : isolated) {
        // bisect on Sturm count (robust even without a sign change at even-order
        // tangencies, which cannot occur for square-free p anyway)
        Rat x = a, y = b;
        while (y - x > tol) {
            Rat mid = (x + y) / 2;
            if (p(mid) == 0) {
                x = y = mid;
                break;
            }
            if (sturm_count(chain, x, mid) == 1)
                y = mid;
            else
                x = mid;
        }
        RealRoot r;
        if (auto cand = simplest_rational_in(x, y); cand && p(*cand) == 0) {
            r.exact = *cand;
            r.location = to_double(*cand);
        } else {
            r.location = to_double((x + y) / 2);
        }
        out.push_back(r);
    }
    std::sort(out.begin(), out.end(),
              [](const RealRoot& u, const RealRoot& v) { return u.location < v.location; });
    return out;
}

// all real roots of p in [lo,hi] with multiplicities
inline std::vector<RealRoot> real_roots(const Poly<Rat>& p, const Rat& lo, const Rat& hi) {
    std::vector<RealRoot> out;
    for (auto& [factor, mult] : squarefree_decomposition(p)) {
        for (auto r : real_roots_squarefree(factor, lo, hi)) {
            r.multiplicity = mult;
            out.push_back(r);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RealRoot& u, const RealRoot& v) { return u.location < v.location; });
    return out;
}

// real poles of a rational function in [lo,hi] with multiplicities
inline std::vector<RealRoot> real_poles(const RatFn& f, const Rat& lo, const Rat& hi) {
    if (lo >= hi) throw std::invalid_argument("real_poles: need lo < hi");
    return real_roots(f.den, lo, hi);
}

}  // namespace darboux
