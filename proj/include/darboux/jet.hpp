#pragma once

// Truncated Taylor arithmetic ("jets") used as the numeric carrier for every
// non-rational expression.  TaylorJet stores Taylor *coefficients*
// c[k] = f^(k)(x)/k! about the evaluation point; the order is dynamic.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <complex>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace darboux {

struct DomainError : std::runtime_error {
    double location;
    DomainError(double x, const std::string& what)
        : std::runtime_error("domain error at x=" + std::to_string(x) + ": " + what),
          location(x) {}
};

template <class S = double>
struct TaylorJet {
    std::vector<S> c;  // c[k] = f^(k)/k!

    TaylorJet() = default;
    explicit TaylorJet(int order, S value = S(0)) : c(order + 1, S(0)) { c[0] = value; }

    static TaylorJet variable(int order, S x) {
        TaylorJet j(order, x);
        if (order >= 1) j.c[1] = S(1);
        return j;
    }

    int order() const { return static_cast<int>(c.size()) - 1; }
    S value() const { return c[0]; }
    // k-th derivative
    S deriv(int k) const {
        if (k > order()) return S(0);
        S fact(1);
        for (int i = 2; i <= k; ++i) fact *= S(i);
        return c[k] * fact;
    }

    friend TaylorJet operator+(const TaylorJet& a, const TaylorJet& b) {
        TaylorJet r(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) r.c[k] = a.c[k] + b.c[k];
        return r;
    }
    friend TaylorJet operator-(const TaylorJet& a, const TaylorJet& b) {
        TaylorJet r(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) r.c[k] = a.c[k] - b.c[k];
        return r;
    }
    TaylorJet operator-() const {
        TaylorJet r = *this;
        for (auto& v : r.c) v = -v;
        return r;
    }
    friend TaylorJet operator*(const TaylorJet& a, const TaylorJet& b) {
        TaylorJet r(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) {
            S acc(0);
            for (int i = 0; i <= k; ++i) acc += a.c[i] * b.c[k - i];
            r.c[k] = acc;
        }
        return r;
    }
    friend TaylorJet operator*(const S& s, const TaylorJet& a) {
        TaylorJet r = a;
        for (auto& v : r.c) v *= s;
        return r;
    }
    friend TaylorJet operator*(const TaylorJet& a, const S& s) { return s * a; }
    friend TaylorJet operator+(const TaylorJet& a, const S& s) {
        TaylorJet r = a;
        r.c[0] += s;
        return r;
    }
    friend TaylorJet operator-(const TaylorJet& a, const S& s) { return a + (-s); }

    friend TaylorJet operator/(const TaylorJet& a, const TaylorJet& b) {
        if (tiny(b.c[0])) throw DomainError(std::numeric_limits<double>::quiet_NaN(),
                                            "division by (near-)zero value");
        TaylorJet r(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) {
            S acc = a.c[k];
            for (int i = 0; i < k; ++i) acc -= r.c[i] * b.c[k - i];
            r.c[k] = acc / b.c[0];
        }
        return r;
    }

    static bool tiny(const S& v) {
        using std::abs;
        return abs(v) < 1e-14;
    }
};

namespace detail {

// f(g) for elementary f given f's Taylor coefficients b[] about g.value()
template <class S>
TaylorJet<S> compose_series(const std::vector<S>& b, const TaylorJet<S>& g) {
    TaylorJet<S> u = g;  // u = g - g0
    u.c[0] = S(0);
    TaylorJet<S> acc(g.order(), S(0));
    for (int k = static_cast<int>(b.size()) - 1; k >= 0; --k) acc = acc * u + b[k];
    return acc;
}

}  // namespace detail

template <class S>
TaylorJet<S> exp(const TaylorJet<S>& g) {
    using std::exp;
    int n = g.order();
    std::vector<S> b(n + 1);
    b[0] = exp(g.c[0]);
    for (int k = 1; k <= n; ++k) b[k] = b[k - 1] / S(k);
    return detail::compose_series(b, g);
}

template <class S>
TaylorJet<S> sin(const TaylorJet<S>& g) {
    using std::cos;
    using std::sin;
    int n = g.order();
    std::vector<S> b(n + 1);
    S s = sin(g.c[0]), c = cos(g.c[0]);
    const S cyc[4] = {s, c, -s, -c};
    S fact(1);
    for (int k = 0; k <= n; ++k) {
        if (k > 0) fact *= S(k);
        b[k] = cyc[k % 4] / fact;
    }
    return detail::compose_series(b, g);
}

template <class S>
TaylorJet<S> cos(const TaylorJet<S>& g) {
    using std::cos;
    using std::sin;
    int n = g.order();
    std::vector<S> b(n + 1);
    S s = sin(g.c[0]), c = cos(g.c[0]);
    const S cyc[4] = {c, -s, -c, s};
    S fact(1);
    for (int k = 0; k <= n; ++k) {
        if (k > 0) fact *= S(k);
        b[k] = cyc[k % 4] / fact;
    }
    return detail::compose_series(b, g);
}

template <class S>
TaylorJet<S> sinh(const TaylorJet<S>& g) {
    using std::cosh;
    using std::sinh;
    int n = g.order();
    std::vector<S> b(n + 1);
    S s = sinh(g.c[0]), c = cosh(g.c[0]);
    S fact(1);
    for (int k = 0; k <= n; ++k) {
        if (k > 0) fact *= S(k);
        b[k] = (k % 2 == 0 ? s : c) / fact;
    }
    return detail::compose_series(b, g);
}

template <class S>
TaylorJet<S> cosh(const TaylorJet<S>& g) {
    using std::cosh;
    using std::sinh;
    int n = g.order();
    std::vector<S> b(n + 1);
    S s = sinh(g.c[0]), c = cosh(g.c[0]);
    S fact(1);
    for (int k = 0; k <= n; ++k) {
        if (k > 0) fact *= S(k);
        b[k] = (k % 2 == 0 ? c : s) / fact;
    }
    return detail::compose_series(b, g);
}

template <class S>
TaylorJet<S> tan(const TaylorJet<S>& g) {
    return sin(g) / cos(g);
}

template <class S>
TaylorJet<S> tanh(const TaylorJet<S>& g) {
    return sinh(g) / cosh(g);
}

// u^r for real exponent; positive base required
template <class S>
TaylorJet<S> pow_real(const TaylorJet<S>& g, double r) {
    static_assert(std::is_floating_point_v<S>, "fractional powers are real-only");
    if (!(g.c[0] > 0))
        throw DomainError(g.c[0], "fractional power of non-positive base");
    int n = g.order();
    std::vector<S> b(n + 1);
    b[0] = std::pow(g.c[0], r);
    // binomial series: b[k] = C(r,k) * g0^(r-k)
    S binom(1);
    for (int k = 1; k <= n; ++k) {
        binom *= (S(r) - S(k - 1)) / S(k);
        b[k] = binom * std::pow(g.c[0], r - k);
    }
    return detail::compose_series(b, g);
}

// integer power via squaring; handles negative bases and negative exponents
template <class S>
TaylorJet<S> pow_int(TaylorJet<S> g, long e) {
    TaylorJet<S> one(g.order(), S(1));
    if (e == 0) return one;
    bool inv = e < 0;
    if (inv) e = -e;
    TaylorJet<S> acc = one;
    while (e > 0) {
        if (e & 1) acc = acc * g;
        if (e > 1) g = g * g;
        e >>= 1;
    }
    return inv ? one / acc : acc;
}

}  // namespace darboux
