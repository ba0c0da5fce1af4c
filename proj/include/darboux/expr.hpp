#pragma once

// Small closed-form expression trees over one real variable, evaluated through
// truncated Taylor jets.  The operator set is fixed: rational constants, x,
// + - * /, rational powers, sin cos tan sinh cosh tanh exp.  Domains are
// tracked: evaluating outside the domain (pole of tan, fractional power of a
// non-positive base, division by zero) throws DomainError instead of
// producing NaN.

#include "darboux/jet.hpp"
#include "darboux/rational.hpp"

#include <memory>
#include <string>

namespace darboux {

enum class ExprOp {
    Const,
    Var,
    Add,
    Sub,
    Mul,
    Div,
    Pow,  // rational exponent
    Sin,
    Cos,
    Tan,
    Sinh,
    Cosh,
    Tanh,
    Exp,
};

struct ExprNode;

class Expr {
  public:
    Expr() = default;

    static Expr var();
    static Expr lit(const Rat& v);
    static Expr lit(long num, long den = 1) { return lit(Rat(num, den)); }

    TaylorJet<double> jet(double x, int order) const;
    double operator()(double x) const { return jet(x, 0).value(); }

    Expr pow(const Rat& exponent) const;

    bool empty() const { return !node_; }
    const ExprNode& node() const { return *node_; }

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a);

  private:
    static Expr make(ExprOp op, Expr a = {}, Expr b = {}, Rat v = 0);
    std::shared_ptr<const ExprNode> node_;
    friend Expr sin(const Expr&);
    friend Expr cos(const Expr&);
    friend Expr tan(const Expr&);
    friend Expr sinh(const Expr&);
    friend Expr cosh(const Expr&);
    friend Expr tanh(const Expr&);
    friend Expr exp(const Expr&);
};

struct ExprNode {
    ExprOp op;
    Expr a, b;
    Rat value;  // Const payload or Pow exponent
};

inline Expr Expr::make(ExprOp op, Expr a, Expr b, Rat v) {
    Expr e;
    e.node_ = std::make_shared<const ExprNode>(ExprNode{op, std::move(a), std::move(b), std::move(v)});
    return e;
}

inline Expr Expr::var() { return make(ExprOp::Var); }
inline Expr Expr::lit(const Rat& v) { return make(ExprOp::Const, {}, {}, v); }

inline Expr operator+(const Expr& a, const Expr& b) { return Expr::make(ExprOp::Add, a, b); }
inline Expr operator-(const Expr& a, const Expr& b) { return Expr::make(ExprOp::Sub, a, b); }
inline Expr operator*(const Expr& a, const Expr& b) { return Expr::make(ExprOp::Mul, a, b); }
inline Expr operator/(const Expr& a, const Expr& b) { return Expr::make(ExprOp::Div, a, b); }
inline Expr operator-(const Expr& a) { return Expr::lit(0) - a; }

inline Expr Expr::pow(const Rat& exponent) const { return make(ExprOp::Pow, *this, {}, exponent); }
inline Expr sin(const Expr& a) { return Expr::make(ExprOp::Sin, a); }
inline Expr cos(const Expr& a) { return Expr::make(ExprOp::Cos, a); }
inline Expr tan(const Expr& a) { return Expr::make(ExprOp::Tan, a); }
inline Expr sinh(const Expr& a) { return Expr::make(ExprOp::Sinh, a); }
inline Expr cosh(const Expr& a) { return Expr::make(ExprOp::Cosh, a); }
inline Expr tanh(const Expr& a) { return Expr::make(ExprOp::Tanh, a); }
inline Expr exp(const Expr& a) { return Expr::make(ExprOp::Exp, a); }
inline Expr sqrt(const Expr& a) { return a.pow(Rat(1, 2)); }

namespace detail {

inline TaylorJet<double> expr_jet(const ExprNode& n, double x, int order) {
    using J = TaylorJet<double>;
    switch (n.op) {
        case ExprOp::Const:
            return J(order, to_double(n.value));
        case ExprOp::Var:
            return J::variable(order, x);
        case ExprOp::Add:
            return expr_jet(n.a.node(), x, order) + expr_jet(n.b.node(), x, order);
        case ExprOp::Sub:
            return expr_jet(n.a.node(), x, order) - expr_jet(n.b.node(), x, order);
        case ExprOp::Mul:
            return expr_jet(n.a.node(), x, order) * expr_jet(n.b.node(), x, order);
        case ExprOp::Div:
            return expr_jet(n.a.node(), x, order) / expr_jet(n.b.node(), x, order);
        case ExprOp::Pow: {
            J base = expr_jet(n.a.node(), x, order);
            if (denominator(n.value) == 1)
                return pow_int(base, n.value.convert_to<long>());
            return pow_real(base, to_double(n.value));
        }
        case ExprOp::Sin:
            return sin(expr_jet(n.a.node(), x, order));
        case ExprOp::Cos:
            return cos(expr_jet(n.a.node(), x, order));
        case ExprOp::Tan:
            return tan(expr_jet(n.a.node(), x, order));
        case ExprOp::Sinh:
            return sinh(expr_jet(n.a.node(), x, order));
        case ExprOp::Cosh:
            return cosh(expr_jet(n.a.node(), x, order));
        case ExprOp::Tanh:
            return tanh(expr_jet(n.a.node(), x, order));
        case ExprOp::Exp:
            return exp(expr_jet(n.a.node(), x, order));
    }
    throw std::logic_error("unreachable expression op");
}

}  // namespace detail

inline TaylorJet<double> Expr::jet(double x, int order) const {
    try {
        return detail::expr_jet(*node_, x, order);
    } catch (const DomainError& e) {
        // attach the evaluation point (inner ops do not know it)
        throw DomainError(x, e.what());
    }
}

// rational constant-coefficient convenience: p(x)/q(x) as an Expr
inline Expr to_expr(const RatFn& f) {
    auto poly_expr = [](const Poly<Rat>& p) {
        Expr acc = Expr::lit(0);
        Expr x = Expr::var();
        for (int k = p.degree(); k >= 0; --k) acc = acc * x + Expr::lit(p.coeff(k));
        return acc;
    };
    return poly_expr(f.num) / poly_expr(f.den);
}

// ---------------------------------------------------------------------------
// value + first three derivatives at a point (the public numeric carrier)

struct Jet3 {
    double x = 0, f = 0, f1 = 0, f2 = 0, f3 = 0;
};

inline Jet3 jet_eval(const Expr& e, double x) {
    TaylorJet<double> j = e.jet(x, 3);
    return Jet3{x, j.deriv(0), j.deriv(1), j.deriv(2), j.deriv(3)};
}

// max relative deviation of f1..f3 against central finite differences
inline double jet_check_fd(const Expr& e, double x, double h) {
    Jet3 j = jet_eval(e, x);
    double fp1 = e(x + h), fm1 = e(x - h), fp2 = e(x + 2 * h), fm2 = e(x - 2 * h);
    double d1 = (fp1 - fm1) / (2 * h);
    double d2 = (fp1 - 2 * j.f + fm1) / (h * h);
    double d3 = (fp2 - 2 * fp1 + 2 * fm1 - fm2) / (2 * h * h * h);
    double dev = 0;
    // the stencil for f^(k) carries roundoff of order |f| eps / h^k; fold that
    // floor into the scale so the metric measures truncation, not noise
    auto rel = [&](double a, double b, int k) {
        double noise = std::abs(j.f) * 1e-9 / std::pow(h, k);
        double scale = std::max({std::abs(a), std::abs(b), 1.0}) + noise;
        return std::abs(a - b) / scale;
    };
    dev = std::max(dev, rel(j.f1, d1, 1));
    dev = std::max(dev, rel(j.f2, d2, 2));
    dev = std::max(dev, rel(j.f3, d3, 3));
    return dev;
}

}  // namespace darboux
