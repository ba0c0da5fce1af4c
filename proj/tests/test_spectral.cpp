#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "darboux/schrodinger.hpp"
#include "darboux/spectral.hpp"

#include <cmath>

using namespace darboux;

namespace {

Poly<Rat> P(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return Poly<Rat>(v);
}

}  // namespace

TEST_CASE("n=2 quantization: tan k = 3k/(3-k^2)") {
    auto eq = spectral_equation_build(2);
    CHECK(spectral_equation_equivalent(eq.N, eq.D, P({0, 3}), P({3, 0, -1})));
}

TEST_CASE("n=3 quantization: tan k = (105k-7k^3)/(105-42k^2)") {
    auto eq = spectral_equation_build(3);
    CHECK(spectral_equation_equivalent(eq.N, eq.D, P({0, 105, 0, -7}), P({105, 0, -42})));
    // the sign of the quadratic term in the denominator matters: the +42k^2
    // variant is a different equation with different roots
    CHECK(!spectral_equation_equivalent(eq.N, eq.D, P({0, -105, 0, 7}), P({105, 0, 42})));
}

TEST_CASE("n=1 has no confining region") {
    CHECK_THROWS(spectral_equation_build(1));
}

TEST_CASE("first roots for n=2 are the expected transcendental roots") {
    auto eq = spectral_equation_build(2);
    auto roots = spectral_roots(eq, 3);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].kappa == doctest::Approx(5.763459196894550).epsilon(1e-10));
    CHECK(roots[1].kappa == doctest::Approx(9.095011330476355).epsilon(1e-10));
    CHECK(roots[2].kappa == doctest::Approx(12.322940970566582).epsilon(1e-10));
    CHECK(roots[0].energy(1.0) == doctest::Approx(33.21746191).epsilon(1e-8));
    // cleared residual vanishes at each root (away from tan poles)
    for (const auto& r : roots) CHECK(std::abs(eq.residual(r.kappa)) < 1e-6);
}

TEST_CASE("roots increase and approach the box ladder") {
    for (int n : {2, 3, 4}) {
        auto eq = spectral_equation_build(n);
        auto roots = spectral_roots(eq, 40);
        REQUIRE((int)roots.size() == 40);
        for (size_t i = 1; i < roots.size(); ++i)
            CHECK(roots[i].kappa > roots[i - 1].kappa);
        // kappa_m - (m + n/2) pi shrinks monotonically in the tail
        auto off = [&](int m) {
            return std::abs(roots[m - 1].kappa - (m + n / 2.0) * M_PI);
        };
        for (int m = 10; m < 20; ++m) CHECK(off(m + 1) < off(m));
        // asymptotically parabolic spectrum: E_m/(m pi)^2 -> 1, slowly
        auto par = [&](int m) {
            return std::abs(roots[m - 1].energy(1.0) / (m * m * M_PI * M_PI) - 1.0);
        };
        CHECK(par(40) < par(10));
        CHECK(std::abs(roots[39].kappa / ((40 + n / 2.0) * M_PI) - 1.0) < 1e-3);
    }
}

TEST_CASE("n=3 roots agree with the shooting oracle") {
    auto eq = spectral_equation_build(3);
    auto roots = spectral_roots(eq, 2);
    auto spec = catalog_three_region(3, 1);
    auto left = indicial_endpoint(spec, -1.0, true);
    auto right = indicial_endpoint(spec, 0.0, false);
    auto states = shoot_eigen(spec.value, left, right, 1.0,
                              roots[1].energy(1.0) * 1.15, 2, 5e-4);
    REQUIRE(states.size() == 2);
    for (int i = 0; i < 2; ++i) {
        double ref = roots[i].energy(1.0);
        CHECK(std::abs(states[i].energy - ref) / ref < 1e-6);
    }
}
