#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "darboux/scattering.hpp"

#include <cmath>
#include <complex>

using namespace darboux;

TEST_CASE("closed forms: values, unitarity, inverse pair, bound-state pole") {
    // (1-ikc)/(1+ikc) at k = c = 1 is -i
    Cplx s = analytic_smatrix("10-right", 1, 1.0, 1.0);
    CHECK(std::abs(s - Cplx(0, -1)) < 1e-14);

    for (double k : {0.2, 0.7, 1.9, 6.0}) {
        for (double c : {0.5, 1.0, 2.0}) {
            Cplx r = analytic_smatrix("10-right", 1, k, c);
            Cplx l = analytic_smatrix("10-left", 1, k, c);
            CHECK(std::abs(r * l - 1.0) < 1e-12);
            CHECK(std::abs(std::abs(r) - 1.0) < 1e-12);
        }
        for (int n : {1, 2, 3, 4}) {
            CHECK(std::abs(std::abs(smatrix_left(n, k, 1.0)) - 1.0) < 1e-12);
            CHECK(analytic_smatrix("32-right", n, k, 1.0) ==
                  Cplx(n % 2 ? 1.0 : -1.0, 0.0));
            CHECK(analytic_smatrix("centrifugal", n, k, 1.0) ==
                  Cplx(n % 2 ? -1.0 : 1.0, 0.0));
        }
    }

    // the right-side S continues to a pole at the bound-state momentum k = i/c
    for (double c : {0.5, 1.0, 3.0}) {
        Cplx near_pole = smatrix_n1_right(Cplx(0, 1 / c) * (1 - 1e-7), c);
        CHECK(std::abs(near_pole) > 1e6);
    }
}

TEST_CASE("left-side closed forms reduce to the quoted rational-trig ratios") {
    for (double k : {0.3, 1.1, 2.6, 5.0}) {
        double q = k;  // c = 1
        // n=1: inverse of the right side
        CHECK(std::abs(smatrix_left(1, k, 1.0) -
                       (1.0 + Cplx(0, q)) / (1.0 - Cplx(0, q))) < 1e-12);
        // n=2: (q^2 - 3iq - 3)/(-q^2 - 3iq + 3)
        Cplx n2 = (Cplx(q * q - 3, -3 * q)) / (Cplx(3 - q * q, -3 * q));
        CHECK(std::abs(smatrix_left(2, k, 1.0) - n2) < 1e-12);
        // n=3: ((42q^2-105) + i(7q^3-105q)) / ((42q^2-105) - i(7q^3-105q))
        Cplx n3 = Cplx(42 * q * q - 105, 7 * q * q * q - 105 * q) /
                  Cplx(42 * q * q - 105, -(7 * q * q * q - 105 * q));
        CHECK(std::abs(smatrix_left(3, k, 1.0) - n3) < 1e-12);
    }
    // scaling: only the product kc enters
    CHECK(std::abs(smatrix_left(2, 0.7, 2.0) - smatrix_left(2, 1.4, 1.0)) < 1e-12);
}

TEST_CASE("reflection phase lock") {
    CHECK(std::abs(reflection_phase_fix(1.0, 1.0) -
                   (-Cplx(0, -1) * std::exp(Cplx(0, 2.0)))) < 1e-13);
    // k -> 0 limit is -1
    CHECK(std::abs(reflection_phase_fix(1e-8, 1.0) + 1.0) < 1e-6);
    CHECK(std::abs(std::abs(reflection_phase_fix(2.3, 0.7)) - 1.0) < 1e-13);
}

TEST_CASE("numeric phase shift matches the closed forms (right pieces)") {
    auto s1 = catalog_three_region(1, 1);
    for (double k : {0.3, 1.0, 2.5}) {
        Cplx num = numeric_phase_shift(s1, "right", k).S;
        Cplx an = analytic_smatrix("10-right", 1, k, 1.0);
        CHECK(std::abs(num - an) < 1e-4);
    }
    for (int n : {2, 3}) {
        auto sp = catalog_three_region(n, 1);
        for (double k : {0.5, 1.5}) {
            Cplx num = numeric_phase_shift(sp, "right", k).S;
            CHECK(std::abs(num - Cplx(n % 2 ? 1.0 : -1.0, 0)) < 1e-3);
        }
    }
}

TEST_CASE("numeric phase shift matches the closed forms (left pieces)") {
    for (int n : {1, 2, 3}) {
        auto sp = catalog_three_region(n, 1);
        for (double k : {0.4, 1.2, 3.0}) {
            Cplx num = numeric_phase_shift(sp, "left", k).S;
            Cplx an = smatrix_left(n, k, 1.0);
            CHECK(std::abs(num - an) < 1e-3);
        }
    }
}

TEST_CASE("numeric phase shift on the pure centrifugal tail is trivial") {
    auto sp = catalog_centrifugal(2);
    for (double k : {0.8, 2.0}) {
        Cplx num = numeric_phase_shift(sp, "right", k).S;
        CHECK(std::abs(num - 1.0) < 1e-6);
    }
}

TEST_CASE("Levinson spans account for bound states and the two tails") {
    // n=1 right piece: one bound state, tails l=2 far / l=1 at the pole
    auto s1 = catalog_three_region(1, 1);
    auto lv = levinson_span(s1, "right", 1, 1);
    CHECK(std::abs(lv.ledger_total - M_PI / 2) < 1e-12);
    CHECK(std::abs(lv.span - lv.ledger_total) < 0.02);

    // n=2 right piece: the threshold-bound state contributes a full pi,
    // cancelling the tail mismatch exactly
    auto s2 = catalog_three_region(2, 1);
    auto lv2 = levinson_span(s2, "right", 1, 1);
    CHECK(std::abs(lv2.ledger_total) < 1e-12);
    CHECK(std::abs(lv2.span - lv2.ledger_total) < 0.02);

    // left pieces: no bound states, span -n pi/2
    for (int n : {2, 3}) {
        auto sp = catalog_three_region(n, 1);
        auto lvl = levinson_span(sp, "left", 0, 1);
        CHECK(std::abs(lvl.ledger_total + n * M_PI / 2) < 1e-12);
        CHECK(std::abs(lvl.span - lvl.ledger_total) < 0.02);
    }
}

TEST_CASE("sech^2 wells are reflectionless with the product transmission") {
    for (int n : {1, 2}) {
        for (double k : {0.5, 1.0, 2.0}) {
            auto tr = sech_transmission(n, k);
            Cplx an = sech_transmission_analytic(n, k);
            CHECK(std::abs(tr.t - an) < 1e-6);
            CHECK(std::abs(tr.r) < 1e-6);
            CHECK(std::abs(std::norm(tr.t) + std::norm(tr.r) - 1.0) < 1e-6);
        }
    }
    // n=1 at k=1: t = (i-1)/(i+1) = i, a pure quarter-wave phase
    CHECK(std::abs(sech_transmission_analytic(1, 1.0) - Cplx(0, 1)) < 1e-14);
    // the n-step product is the single-step factors multiplied together
    for (double k : {0.7, 1.3}) {
        Cplx prod(1, 0);
        for (int j = 1; j <= 3; ++j)
            prod *= (Cplx(0, k) - double(j)) / (Cplx(0, k) + double(j));
        CHECK(std::abs(sech_transmission_analytic(3, k) - prod) < 1e-14);
    }
}
