#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "darboux/schrodinger.hpp"

#include <cmath>

using namespace darboux;

namespace {

double laurent_eval(const LaurentData& L, double s) {
    double v = L.lambda / (s * s);
    double sp = 1.0 / s;
    for (double w : L.w) {
        v += w * sp;
        sp *= s;
    }
    return v;
}

}  // namespace

TEST_CASE("Laurent expansion of the rational n=1 potential at its pole") {
    RatFn v = three_region_potential<Rat>(1, 1);
    LaurentData L = laurent_rational(v, -1.0);
    CHECK(L.lambda == doctest::Approx(2.0).epsilon(1e-10));
    for (double s : {0.05, 0.1, 0.2}) {
        CHECK(laurent_eval(L, s) == doctest::Approx(eval_d(v, -1 + s)).epsilon(1e-9));
        LaurentData M = L.mirrored();
        CHECK(laurent_eval(M, s) == doctest::Approx(eval_d(v, -1 - s)).epsilon(1e-9));
    }
    CHECK_THROWS(laurent_rational(v, 0.5));  // not a pole
}

TEST_CASE("Laurent expansion of trig and sinh potentials") {
    // (3/4) csc^2 s = 3/4 s^-2 + 1/4 + (3/4)(1/15) s^2 + ...
    LaurentData t = laurent_trig(0.75, 0.0);
    CHECK(t.lambda == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(t.w[0] == doctest::Approx(0.0));
    CHECK(t.w[1] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(t.w[3] == doctest::Approx(0.05).epsilon(1e-12));
    LaurentData f = laurent_trig(1.75, -2.0);
    for (double s : {0.2, 0.5}) {
        double direct = (1.75 - 2 * std::cos(s)) / (std::sin(s) * std::sin(s));
        CHECK(laurent_eval(f, s) == doctest::Approx(direct).epsilon(1e-10));
    }
    // q/sinh^2 s = q s^-2 - q/3 + (q/15) s^2 + ...
    LaurentData sh = laurent_sinh(2.0);
    CHECK(sh.lambda == doctest::Approx(2.0));
    CHECK(sh.w[1] == doctest::Approx(-2.0 / 3).epsilon(1e-12));
    CHECK(sh.w[3] == doctest::Approx(2.0 / 15).epsilon(1e-12));
}

TEST_CASE("Frobenius regular branch of the pure centrifugal pole is a power") {
    LaurentData L;
    L.lambda = 2.0;
    FrobeniusSeries f = frobenius_series(L, 0.0);
    CHECK(f.alpha == doctest::Approx(2.0));
    auto [v, d] = f.eval(0.05);
    CHECK(v == doctest::Approx(0.0025).epsilon(1e-14));
    CHECK(d == doctest::Approx(0.1).epsilon(1e-14));
}

TEST_CASE("free particle: Numerov tracks sin(kx) over ten wavelengths") {
    auto zero = [](double) { return 0.0; };
    double h = 1e-3;
    int n = (int)(20 * M_PI / h);
    auto sol = numerov_integrate<double>(zero, 1.0, 0.0, h, n, std::sin(0.0), std::sin(h));
    double worst = 0;
    for (size_t i = 0; i < sol.x.size(); i += 997)
        worst = std::max(worst, std::abs(sol.psi[i] - std::sin(sol.x[i])));
    CHECK(worst < 1e-8);
}

TEST_CASE("Numerov is fourth order") {
    auto vf = [](double x) { return -2.0 / std::cosh(x) / std::cosh(x); };
    auto run = [&](double h) {
        int n = (int)(10.0 / h) + 1;
        // exact E=-1 solution: 1/cosh(x), start at -5
        auto sol = numerov_integrate<double>(vf, -1.0, -5.0, h, n, 1 / std::cosh(-5.0),
                                             1 / std::cosh(-5.0 + h));
        double worst = 0;
        for (size_t i = 0; i < sol.x.size(); ++i)
            worst = std::max(worst, std::abs(sol.psi[i] - 1 / std::cosh(sol.x[i])));
        return worst;
    };
    double e1 = run(0.02), e2 = run(0.01);
    CHECK(e1 / e2 > 12.0);
    CHECK(e1 / e2 < 20.0);
}

TEST_CASE("indicial start on 2/x^2 reproduces the exact power solution") {
    auto vf = [](double x) { return 2.0 / (x * x); };
    LaurentData L;
    L.lambda = 2.0;
    FrobeniusSeries f = frobenius_series(L, 0.0);
    double h = 1e-3, s0 = 0.05;
    auto [v0, d0] = f.eval(s0);
    auto [v1, d1] = f.eval(s0 + h);
    (void)d0;
    (void)d1;
    int n = (int)(5.0 / h);
    auto sol = numerov_integrate<double>(vf, 0.0, s0, h, n, v0, v1);
    double last = sol.psi.back(), xlast = sol.x.back();
    CHECK(last / (xlast * xlast) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("single bound state of the n=1 potential at E = -1") {
    auto spec = catalog_three_region(1, 1);
    auto left = indicial_endpoint(spec, -1.0, true);
    auto right = cutoff_endpoint(40.0);
    auto states = shoot_eigen(spec.value, left, right, -5.0, -0.01, 3, 1e-3);
    REQUIRE(states.size() == 1);
    CHECK(states[0].energy == doctest::Approx(-1.0).epsilon(1e-6));
    CHECK(states[0].nodes == 0);

    // shape: (x+1)^2/(x^2-x+1) e^{-x}, matched at one normalization point
    auto ref = [](double x) {
        return (x + 1) * (x + 1) / (x * x - x + 1) * std::exp(-x);
    };
    const auto& b = states[0];
    double ratio = 0;
    for (size_t i = 0; i < b.x.size(); ++i)
        if (std::abs(b.x[i] - 1.0) < 1e-3) ratio = b.psi[i] / ref(b.x[i]);
    REQUIRE(ratio != 0);
    double worst = 0, amp = 0;
    for (size_t i = 0; i < b.x.size(); ++i) {
        if (b.x[i] < -0.9 || b.x[i] > 8) continue;
        worst = std::max(worst, std::abs(b.psi[i] - ratio * ref(b.x[i])));
        amp = std::max(amp, std::abs(b.psi[i]));
    }
    CHECK(worst / amp < 1e-6);
}

TEST_CASE("purely repulsive piece holds no bound state") {
    auto spec = catalog_three_region(2, 1);
    auto left = cutoff_endpoint(-30.0);
    auto right = indicial_endpoint(spec, -1.0, false);
    auto states = shoot_eigen(spec.value, left, right, -50.0, -1e-3, 5, 1e-3);
    CHECK(states.empty());
}

TEST_CASE("confining piece: first levels match the transcendental roots") {
    auto spec = catalog_three_region(2, 1);
    auto left = indicial_endpoint(spec, -1.0, true);
    auto right = indicial_endpoint(spec, 0.0, false);
    auto states = shoot_eigen(spec.value, left, right, 1.0, 130.0, 3, 5e-4);
    REQUIRE(states.size() >= 2);
    // first root of tan k = 3k/(3-k^2) (spherical Bessel j2), squared
    double k1 = 5.763459196894550;
    CHECK(states[0].energy == doctest::Approx(k1 * k1).epsilon(1e-6));
    CHECK(states[0].nodes == 0);
    CHECK(states[1].nodes == 1);
}

TEST_CASE("no negative-energy state on the scattering piece for n >= 2") {
    auto spec = catalog_three_region(2, 1);
    auto left = indicial_endpoint(spec, 0.0, true);
    auto right = cutoff_endpoint(40.0);
    auto states = shoot_eigen(spec.value, left, right, -50.0, -1e-6, 5, 1e-3);
    CHECK(states.empty());
}

TEST_CASE("zero-energy bound state is exact, normalized, nodeless") {
    auto b = zero_energy_bound_state(2, 1);
    CHECK(b.nodes == 0);
    double peak = 0;
    for (size_t i = 0; i < b.x.size(); ++i) peak = std::max(peak, std::abs(b.psi[i]));
    CHECK(peak > 0.1);
    double nrm2 = 0;
    for (size_t i = 0; i + 1 < b.x.size(); ++i)
        nrm2 += 0.5 * (b.psi[i] * b.psi[i] + b.psi[i + 1] * b.psi[i + 1]) *
                (b.x[i + 1] - b.x[i]);
    CHECK(nrm2 == doctest::Approx(1.0).epsilon(1e-3));
    CHECK_THROWS(zero_energy_bound_state(1, 1));
}
