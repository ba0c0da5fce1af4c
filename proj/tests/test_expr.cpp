#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "darboux/expr.hpp"

#include <cmath>

using namespace darboux;

TEST_CASE("Maclaurin data of cosh at 0") {
    Jet3 j = jet_eval(cosh(Expr::var()), 0.0);
    CHECK(j.f == doctest::Approx(1.0));
    CHECK(j.f1 == doctest::Approx(0.0));
    CHECK(j.f2 == doctest::Approx(1.0));
    CHECK(j.f3 == doctest::Approx(0.0));
}

TEST_CASE("-tanh at 0: value 0, slope -1") {
    Jet3 j = jet_eval(-tanh(Expr::var()), 0.0);
    CHECK(j.f == doctest::Approx(0.0));
    CHECK(j.f1 == doctest::Approx(-1.0));
}

TEST_CASE("sin^{3/2} at pi/2") {
    Expr e = sin(Expr::var()).pow(Rat(3, 2));
    Jet3 j = jet_eval(e, M_PI / 2);
    CHECK(j.f == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(j.f1 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(j.f2 == doctest::Approx(-1.5).epsilon(1e-12));
    CHECK(std::abs(j.f3) < 1e-10);
    CHECK(jet_check_fd(e, M_PI / 2, 1e-5) < 1e-6);
}

TEST_CASE("finite-difference harness on smooth points") {
    Expr x = Expr::var();
    CHECK(jet_check_fd(exp(-x), 1.0, 1e-4) < 1e-6);
    CHECK(jet_check_fd(Expr::lit(2) / (x * x), 0.5, 1e-5) < 1e-6);
}

TEST_CASE("tan at its pole is a domain error, not NaN") {
    CHECK_THROWS_AS(jet_eval(tan(Expr::var()), M_PI / 2), DomainError);
}

TEST_CASE("fractional power of a negative base is a domain error") {
    Expr e = sin(Expr::var()).pow(Rat(1, 2));
    CHECK_THROWS_AS(jet_eval(e, -0.5), DomainError);
}

TEST_CASE("jets of a rational expression match exact derivatives") {
    // f = (2x^3 - 1)/(x(x^3+1))
    RatFn f(Poly<Rat>{Rat(-1), Rat(0), Rat(0), Rat(2)},
            Poly<Rat>{Rat(0), Rat(1), Rat(0), Rat(0), Rat(1)});
    Expr e = to_expr(f);
    RatFn f1 = f.derivative();
    RatFn f2 = f1.derivative();
    RatFn f3 = f2.derivative();
    for (double x : {0.3, 0.7, 1.1, 2.5, -0.4, -2.0}) {
        Jet3 j = jet_eval(e, x);
        CHECK(j.f == doctest::Approx(eval_d(f, x)).epsilon(1e-12));
        CHECK(j.f1 == doctest::Approx(eval_d(f1, x)).epsilon(1e-11));
        CHECK(j.f2 == doctest::Approx(eval_d(f2, x)).epsilon(1e-10));
        CHECK(j.f3 == doctest::Approx(eval_d(f3, x)).epsilon(1e-9));
    }
}

TEST_CASE("chain and product rules hold for composite expressions") {
    Expr x = Expr::var();
    Expr e = sin(x * x) * exp(-x) + cos(x) / (Expr::lit(2) + sinh(x));
    for (double p : {0.2, 0.9}) {
        CHECK(jet_check_fd(e, p, 1e-4) < 1e-6);
    }
    // larger high-order derivatives at 1.7 push the FD truncation itself up
    CHECK(jet_check_fd(e, 1.7, 1e-4) < 1e-5);
}
