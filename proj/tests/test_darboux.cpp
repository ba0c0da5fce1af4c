#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "darboux/darboux.hpp"

#include <cmath>
#include <complex>

using namespace darboux;

namespace {

Poly<Rat> P(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return Poly<Rat>(v);
}

const RatFn kSeedX = RatFn(P({0, 1}));                       // phi = x
const RatFn kSeedTwoStep = RatFn(P({1, 0, 0, 1}), P({0, 1}));  // phi = 1/x + x^2  (mu=1)

}  // namespace

TEST_CASE("superpotential of phi = x is -1/x") {
    RatFn wp = superpotential(kSeedX);
    CHECK(wp == RatFn(P({-1}), P({0, 1})));
}

TEST_CASE("superpotential of a constant seed vanishes") {
    CHECK(superpotential(RatFn(5)).is_zero());
    CHECK_THROWS(superpotential(RatFn(0)));
}

TEST_CASE("superpotential of cosh is -tanh (jet route)") {
    JetFun<> wp = superpotential_fn(jet_fun(cosh(Expr::var())));
    for (double x : {-1.5, 0.0, 0.7, 2.0}) {
        CHECK(wp(x, 1).value() == doctest::Approx(-std::tanh(x)).epsilon(1e-12));
    }
}

TEST_CASE("partner potentials of the first step") {
    // W' = -1/x, E0=0  ->  2/x^2
    RatFn v1 = partner_potential(superpotential(kSeedX), Rat(0));
    CHECK(v1 == RatFn(P({2}), P({0, 0, 1})));

    // W' = -tanh, E0=-1  ->  -2/cosh^2
    auto wp = superpotential_fn(jet_fun(cosh(Expr::var())));
    auto v = partner_potential_fn(wp, -1.0);
    for (double x : {-2.0, 0.0, 0.4, 1.3}) {
        double c = std::cosh(x);
        CHECK(v(x) == doctest::Approx(-2.0 / (c * c)).epsilon(1e-12));
    }

    // free fixed point
    CHECK(partner_potential(RatFn(0), Rat(0)).is_zero());
}

TEST_CASE("intertwiner annihilates its seed") {
    auto phi = jet_fun(kSeedTwoStep);
    auto wp = superpotential_fn(phi);
    auto apsi = intertwine<double>(wp, phi);
    for (int i = 0; i < 50; ++i) {
        double x = 0.2 + 0.1 * i;
        CHECK(std::abs(apsi(x, 0).value()) < 1e-12);
    }
}

TEST_CASE("co-kernel: A^dag phi^{-1} = 0") {
    Expr x = Expr::var();
    Expr phi_e = Expr::lit(1) / x + x * x;
    auto wp = superpotential_fn(jet_fun(phi_e));
    auto inv_phi = jet_fun(Expr::lit(1) / phi_e);
    auto out = intertwine_dagger<double>(wp, inv_phi);
    for (int i = 0; i < 50; ++i) {
        double p = 0.3 + 0.15 * i;
        CHECK(std::abs(out(p, 0).value()) < 1e-12);
    }
    // exact statement on the rational side
    RatFn wpr = superpotential(kSeedTwoStep);
    RatFn inv = RatFn(1) / kSeedTwoStep;
    RatFn resid = RatFn(0) - inv.derivative() + wpr * inv;
    CHECK(resid.is_zero());
}

TEST_CASE("two-step intertwiner on exp(-kappa x) matches the closed form") {
    double kappa = 0.5;
    Expr x = Expr::var();
    Expr seed1 = x;
    Expr seed2 = Expr::lit(1) / x + x * x;
    Expr decay = exp(Expr::lit(0) - Expr::lit(1, 2) * x);

    auto a1 = intertwine<double>(superpotential_fn(jet_fun(seed1)), jet_fun(decay));
    auto a2a1 = intertwine<double>(superpotential_fn(jet_fun(seed2)), a1);

    for (double p : {0.5, 1.0, 2.0, 4.0, 7.0}) {
        double expect = (kappa * kappa + 3 * p * (1 + kappa * p) / (1 + p * p * p)) *
                        std::exp(-kappa * p);
        CHECK(a2a1(p, 0).value() == doctest::Approx(expect).epsilon(1e-10));
    }
}

TEST_CASE("intertwining a plane wave through the sech^2 step") {
    using C = std::complex<double>;
    double k = 1.3;
    auto wp = superpotential_fn(jet_fun(cosh(Expr::var())));
    JetFun<C> plane = [k](double x, int order) {
        TaylorJet<C> j(order, std::exp(C(0, k * x)));
        for (int m = 1; m <= order; ++m) j.c[m] = j.c[m - 1] * C(0, k) / double(m);
        return j;
    };
    auto psi = intertwine<C>(wp, plane);
    for (double x : {-2.0, -0.3, 0.9, 3.0}) {
        C expect = (C(0, k) - std::tanh(x)) * std::exp(C(0, k * x));
        CHECK(std::abs(psi(x, 0).value() - expect) < 1e-12);
    }
}

TEST_CASE("isospectral intertwining maps solutions to partner solutions") {
    // psi = x^2 solves V0 = 2/x^2 at E=0; A psi must solve the two-step potential
    auto wp = superpotential_fn(jet_fun(kSeedTwoStep));
    auto v1 = partner_potential_fn(wp, 0.0);
    auto apsi = intertwine<double>(wp, jet_fun(RatFn(P({0, 0, 1}))));
    for (int i = 0; i < 40; ++i) {
        double x = 0.4 + 0.2 * i;
        TaylorJet<double> j = apsi(x, 2);
        double resid = -j.deriv(2) + v1(x) * j.value();
        CHECK(std::abs(resid) / std::max(1.0, std::abs(j.value())) < 1e-8);
    }
}

TEST_CASE("second solutions") {
    // psi1 = 1/x -> psi2 ~ x^2
    RatFn psi2 = second_solution_monomial(RatFn(P({1}), P({0, 1})));
    CHECK(psi2 == RatFn(Poly<Rat>{Rat(0), Rat(0), Rat(1, 3)}));
    // psi1 = 1 -> psi2 = x
    CHECK(second_solution_monomial(RatFn(1)) == RatFn::X());
    // psi1 = x^{-n} -> psi2 ~ x^{n+1}
    RatFn pm3 = second_solution_monomial(RatFn(P({1}), P({0, 0, 0, 1})));
    CHECK(pm3 == RatFn(Poly<Rat>{Rat(0), Rat(0), Rat(0), Rat(0), Rat(1, 7)}));
}

TEST_CASE("numeric second solution has unit Wronskian") {
    auto psi1 = jet_fun(cosh(Expr::var()));
    auto psi2 = second_solution(psi1, 0.0);
    for (double x : {-1.5, -0.2, 0.4, 1.1, 2.5}) {
        TaylorJet<double> a = psi1(x, 1), b = psi2(x, 1);
        double w = a.value() * b.deriv(1) - a.deriv(1) * b.value();
        CHECK(w == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("second solution reports a zero on the path") {
    Expr x = Expr::var();
    auto psi1 = jet_fun(x - Expr::lit(1));
    auto psi2 = second_solution(psi1, 0.0);
    try {
        psi2(2.0, 0);
        FAIL("expected ZeroCrossingError");
    } catch (const ZeroCrossingError& e) {
        CHECK(e.location == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("chain build: two steps reach the second-step potential") {
    auto chain = chain_build(RatFn(0), {kSeedX, kSeedTwoStep});
    RatFn expect(P({0, -12, 0, 0, 6}), P({1, 0, 0, 2, 0, 0, 1}));
    CHECK(chain.final_potential == expect);
    CHECK(chain.steps.size() == 2);
}

TEST_CASE("chain build: x, x^2, x^3 give the n=3 centrifugal potential") {
    auto chain = chain_build(RatFn(0), {kSeedX, RatFn(P({0, 0, 1})), RatFn(P({0, 0, 0, 1}))});
    CHECK(chain.final_potential == RatFn(P({12}), P({0, 0, 1})));
}

TEST_CASE("chain build: empty seed list is the identity") {
    CHECK(chain_build(RatFn(0), {}).final_potential.is_zero());
}

TEST_CASE("chain build rejects a non-solution seed") {
    try {
        chain_build(RatFn(0), {RatFn(P({0, 0, 1}))});  // x^2 does not solve V=0
        FAIL("expected SeedValidationError");
    } catch (const SeedValidationError& e) {
        CHECK(e.step == 0);
    }
}

TEST_CASE("S-matrix composition under one more step") {
    auto one = [](double) { return std::complex<double>(1.0, 0.0); };
    auto shat = chain_smatrix_compose(one, 0.0);
    CHECK(std::abs(shat(1.7) - std::complex<double>(-1.0, 0.0)) < 1e-15);

    auto minus = [](double) { return std::complex<double>(-1.0, 0.0); };
    CHECK(std::abs(chain_smatrix_compose(minus, 0.0)(0.3) -
                   std::complex<double>(1.0, 0.0)) < 1e-15);

    auto arb = [](double k) { return std::exp(std::complex<double>(0, 0.77 * k)); };
    auto same = chain_smatrix_compose(arb, std::numeric_limits<double>::infinity());
    CHECK(std::abs(same(2.0) - arb(2.0)) < 1e-15);
    // unimodularity is preserved
    auto comp = chain_smatrix_compose(arb, 1.5);
    CHECK(std::abs(std::abs(comp(3.1)) - 1.0) < 1e-14);
}
