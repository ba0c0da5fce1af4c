#pragma once

// The one-shot verification suite: every externally checkable claim of the
// library, grouped into eleven numbered criteria.  Shared by the acceptance
// test binary and the CLI `verify-all` subcommand.  Tolerances are halved
// under the "strict" profile; exact (zero-tolerance) identities are
// unaffected by the profile.

#include "darboux/catalog.hpp"
#include "darboux/darboux.hpp"
#include "darboux/kdv.hpp"
#include "darboux/scattering.hpp"
#include "darboux/schrodinger.hpp"
#include "darboux/spectral.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace darboux {

struct CheckResult {
    std::string id;
    std::string claim;
    double computed = 0;
    double reference = 0;
    double tolerance = 0;  // 0 means exact identity
    bool pass = false;
};

struct CriterionResult {
    int index = 0;
    std::string title;
    bool pass = true;
    double seconds = 0;
    std::vector<CheckResult> checks;
};

struct VerifyReport {
    std::string profile;
    std::vector<CriterionResult> criteria;
    bool all_pass = true;
};

namespace detail {

class CriterionBuilder {
  public:
    CriterionBuilder(int index, std::string title, double tol_scale)
        : tol_scale_(tol_scale), t0_(std::chrono::steady_clock::now()) {
        r_.index = index;
        r_.title = std::move(title);
    }

    // |computed - reference| <= tol (tol scaled by the profile)
    void approx(const std::string& id, const std::string& claim, double computed,
                double reference, double tol) {
        CheckResult c{id, claim, computed, reference, tol * tol_scale_, false};
        c.pass = std::abs(computed - reference) <= c.tolerance;
        push(c);
    }

    // magnitude bound: computed <= tol
    void bound(const std::string& id, const std::string& claim, double computed,
               double tol) {
        approx(id, claim, computed, 0.0, tol);
    }

    void exact(const std::string& id, const std::string& claim, bool ok) {
        CheckResult c{id, claim, ok ? 0.0 : 1.0, 0.0, 0.0, ok};
        push(c);
    }

    // informational entry; never fails
    void report(const std::string& id, const std::string& claim, double value) {
        CheckResult c{id, claim, value, value, 0.0, true};
        push(c);
    }

    CriterionResult finish() {
        r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_)
                         .count();
        return r_;
    }

  private:
    void push(const CheckResult& c) {
        r_.checks.push_back(c);
        r_.pass = r_.pass && c.pass;
    }
    CriterionResult r_;
    double tol_scale_;
    std::chrono::steady_clock::time_point t0_;
};

// ------------------------------------------------------------------ 1
inline CriterionResult criterion_exact_regeneration(double ts) {
    CriterionBuilder b(1, "exact regeneration of the rational family from V = 0", ts);
    using P = Poly<Rat>;
    RatFn zero(P(Rat(0)));
    // one step with seed x gives 2/x^2
    auto c1 = chain_build<Rat>(zero, {RatFn(P::X())});
    b.exact("c01_one_step", "seed x over V=0 yields 2/x^2",
            (c1.final_potential - RatFn(P(Rat(2)), P::monomial(Rat(1), 2))).num.is_zero());
    // full chains reproduce the closed form, mu = 1
    for (int n = 1; n <= 4; ++n) {
        auto chain = chain_build<Rat>(zero, three_region_seeds<Rat>(n, Rat(1)));
        bool ok = (chain.final_potential - three_region_potential<Rat>(n, Rat(1)))
                      .num.is_zero();
        b.exact("c01_chain_n" + std::to_string(n),
                "chain of n+1 seeds matches the closed form, n=" + std::to_string(n), ok);
    }
    // symbolic mu, n = 2
    using Fmu = Ratio<Rat>;
    auto sym = chain_build<Fmu>(Ratio<Fmu>(Poly<Fmu>(Fmu(0))),
                                three_region_seeds<Fmu>(2, Fmu::X()));
    b.exact("c01_symbolic_mu", "n=2 chain equals the closed form for symbolic mu",
            (sym.final_potential - three_region_potential<Fmu>(2, Fmu::X())).num.is_zero());
    return b.finish();
}

// ------------------------------------------------------------------ 2
inline CriterionResult criterion_n1_bound_state(double ts) {
    CriterionBuilder b(2, "single bound state of the first-step potential", ts);
    auto spec = catalog_three_region(1, 1);
    auto left = indicial_endpoint(spec, -1.0, true);
    auto right = cutoff_endpoint(40.0);
    auto states = shoot_eigen(spec.value, left, right, -5.0, -0.01, 3, 1e-3);
    b.exact("c02_count", "exactly one level in (-5, 0)", states.size() == 1);
    if (states.size() == 1) {
        b.approx("c02_energy", "bound-state energy", states[0].energy, -1.0, 1e-6);
        auto ref = [](double x) {
            return (x + 1) * (x + 1) / (x * x - x + 1) * std::exp(-x);
        };
        const auto& st = states[0];
        double ratio = 0;
        for (size_t i = 0; i < st.x.size(); ++i)
            if (std::abs(st.x[i] - 1.0) < 1e-3) ratio = st.psi[i] / ref(st.x[i]);
        double worst = 0, amp = 0;
        for (size_t i = 0; i < st.x.size(); ++i) {
            if (st.x[i] < -0.9 || st.x[i] > 8) continue;
            worst = std::max(worst, std::abs(st.psi[i] - ratio * ref(st.x[i])));
            amp = std::max(amp, std::abs(st.psi[i]));
        }
        b.bound("c02_shape", "wavefunction matches the closed form on [-0.9, 8]",
                worst / amp, 1e-6);
    }
    return b.finish();
}

// ------------------------------------------------------------------ 3
inline CriterionResult criterion_reflection_smatrix(double ts) {
    CriterionBuilder b(3, "right-piece S-matrix and left/right inverse pair", ts);
    auto spec = catalog_three_region(1, 1);
    double worst_r = 0, worst_prod = 0;
    for (double k : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
        Cplx sr = numeric_phase_shift(spec, "right", k).S;
        worst_r = std::max(worst_r, std::abs(sr - analytic_smatrix("10-right", 1, k, 1.0)));
        Cplx sl = numeric_phase_shift(spec, "left", k).S;
        worst_prod = std::max(worst_prod, std::abs(sl * sr - 1.0));
    }
    b.bound("c03_right_form", "numeric S vs (1-ik)/(1+ik), six momenta", worst_r, 1e-4);
    b.bound("c03_inverse_pair", "numeric S_left * S_right vs 1", worst_prod, 1e-4);
    return b.finish();
}

// ------------------------------------------------------------------ 4
inline CriterionResult criterion_constant_phase(double ts) {
    CriterionBuilder b(4, "constant phase shift and exact threshold state, n=2,3", ts);
    for (int n : {2, 3}) {
        auto spec = catalog_three_region(n, 1);
        double worst = 0;
        for (double k : {0.5, 1.0, 2.0, 4.0, 8.0}) {
            Cplx s = numeric_phase_shift(spec, "right", k).S;
            worst = std::max(worst, std::abs(s - Cplx(n % 2 ? 1.0 : -1.0, 0)));
        }
        b.bound("c04_flat_n" + std::to_string(n),
                "numeric S vs (-1)^{n+1} across k in [0.5, 8]", worst, 1e-3);
        bool ok = schrodinger_residual(three_region_potential<Rat>(n, Rat(1)),
                                       zero_energy_state<Rat>(n, Rat(1)), Rat(0))
                      .is_zero();
        b.exact("c04_zero_energy_n" + std::to_string(n),
                "threshold state solves the equation exactly", ok);
    }
    return b.finish();
}

// ------------------------------------------------------------------ 5
inline CriterionResult criterion_confining_spectra(double ts) {
    CriterionBuilder b(5, "confining spectra vs transcendental roots", ts);
    for (int n : {2, 3}) {
        auto eq = spectral_equation_build(n);
        auto roots = spectral_roots(eq, 20);
        auto spec = catalog_three_region(n, 1);
        auto left = indicial_endpoint(spec, -1.0, true);
        auto right = indicial_endpoint(spec, 0.0, false);
        auto states = shoot_eigen(spec.value, left, right, 1.0,
                                  roots[9].energy(1.0) * 1.05, 10, 5e-4);
        double worst = 1;
        if (states.size() == 10) {
            worst = 0;
            for (int i = 0; i < 10; ++i) {
                double ref = roots[i].energy(1.0);
                worst = std::max(worst, std::abs(states[i].energy - ref) / ref);
            }
        }
        b.bound("c05_levels_n" + std::to_string(n),
                "first 10 eigenvalues vs roots, relative", worst, 1e-6);
        // ladder: kappa_m / (m pi) -> 1 from above, deviation decreasing.
        // note: kappa_m - m pi itself tends to the constant offset n pi / 2,
        // so the absolute difference does not shrink; the relative one does.
        bool decreasing = true;
        auto rel = [&](int m) {
            return std::abs(roots[m - 1].kappa / (m * M_PI) - 1.0);
        };
        for (int m = 10; m < 20; ++m) decreasing = decreasing && rel(m + 1) < rel(m);
        b.exact("c05_ladder_n" + std::to_string(n),
                "relative deviation from the m*pi ladder decreasing, m=10..20",
                decreasing);
    }
    return b.finish();
}

// ------------------------------------------------------------------ 6
inline CriterionResult criterion_repulsive_span(double ts) {
    CriterionBuilder b(6, "left-piece phase span and closed forms, n=2,3", ts);
    for (int n : {2, 3}) {
        auto spec = catalog_three_region(n, 1);
        auto lv = levinson_span(spec, "left", 0, 1);
        // the span proper needs the k -> 0 / k -> infinity limits: the raw
        // window difference delta(0.05) - delta(20) sits 0.20 (n=2) / 0.35
        // (n=3) above -n pi/2 by the closed form itself (finite-k arctangent
        // corrections), so it is extrapolated off the same grid
        b.approx("c06_span_n" + std::to_string(n),
                 "extrapolated span delta(0) - delta(inf) vs -n pi/2", lv.span,
                 -n * M_PI / 2, 0.05);
        b.report("c06_raw_window_n" + std::to_string(n),
                 "unextrapolated delta(0.05) - delta(20)", lv.raw_span);
        double worst = 0;
        for (double k : {0.4, 1.2, 3.0, 6.0, 10.0}) {
            Cplx s = numeric_phase_shift(spec, "left", k).S;
            worst = std::max(worst, std::abs(s - smatrix_left(n, k, 1.0)));
        }
        b.bound("c06_closed_form_n" + std::to_string(n),
                "numeric S vs rational-phase closed form", worst, 1e-3);
    }
    return b.finish();
}

// ------------------------------------------------------------------ 7
inline CriterionResult criterion_golden_ratio(double ts) {
    CriterionBuilder b(7, "golden-ratio critical points of the first-step potential", ts);
    auto g = golden_extrema(Rat(1));
    b.approx("c07_cube_max", "x^3 at the local maximum vs 2 + 3 phi", g.cube_max,
             g.cube_max_ref, 1e-8);
    b.approx("c07_cube_min", "x^3 at the local minimum vs 2 - 3/phi", g.cube_min,
             g.cube_min_ref, 1e-8);
    b.approx("c07_value_max", "V at the local maximum vs closed form", g.v_max,
             g.v_max_ref, 1e-8);
    b.approx("c07_value_min", "V at the local minimum vs closed form", g.v_min,
             g.v_min_ref, 1e-8);
    // labels are assigned by curvature; the source text swaps the min/max
    // names relative to these cubes, so the association itself is the check
    b.exact("c07_curvature_labels",
            "curvature puts the maximum at the larger cube (names in the source "
            "text are swapped; reported, not hidden)",
            g.cube_max > g.cube_min && g.v_max > g.v_min);
    return b.finish();
}

// ------------------------------------------------------------------ 8
inline CriterionResult criterion_reflectionless(double ts) {
    CriterionBuilder b(8, "reflectionless cosh^-2 wells", ts);
    double worst_r = 0, worst_phase = 0, worst_n2 = 0;
    for (double k : {0.5, 1.0, 2.0}) {
        auto t1 = sech_transmission(1, k);
        worst_r = std::max(worst_r, std::abs(t1.r));
        double dphi = std::arg(t1.t / sech_transmission_analytic(1, k));
        worst_phase = std::max(worst_phase, std::abs(dphi));
        auto t2 = sech_transmission(2, k);
        worst_r = std::max(worst_r, std::abs(t2.r));
        worst_n2 = std::max(worst_n2, std::abs(t2.t - sech_transmission_analytic(2, k)));
    }
    b.bound("c08_reflection", "|r(k)| for the single well", worst_r, 1e-6);
    b.bound("c08_phase", "transmission phase vs (ik-1)/(ik+1)", worst_phase, 1e-4);
    b.bound("c08_product", "two-level well vs the product form", worst_n2, 1e-4);
    return b.finish();
}

// ------------------------------------------------------------------ 9
inline CriterionResult criterion_kdv(double ts) {
    CriterionBuilder b(9, "KdV connection", ts);
    b.exact("c09_rational", "two-pole rational profile: residual is the zero function",
            kdv_residual(kdv_rational_solution()).num.is_zero());
    b.exact("c09_static", "2/x^2: residual is the zero function",
            kdv_residual(kdv_static_solution()).num.is_zero());
    b.bound("c09_soliton", "travelling sech^2 residual on 100 points",
            kdv_soliton_residual(Rat(1), Rat(0), -8, 8), 1e-10);
    using Fmu = Ratio<Rat>;
    b.exact("c09_time_slice", "t = mu/12 slice equals the one-step potential",
            (kdv_time_slice(kdv_rational_solution()) -
             three_region_potential<Fmu>(1, Fmu::X()))
                .num.is_zero());
    return b.finish();
}

// ------------------------------------------------------------------ 10
inline CriterionResult criterion_trig_family(double ts) {
    CriterionBuilder b(10, "trigonometric family and its constructed partner", ts);
    Expr x = Expr::var();
    Expr psi = sin(x).pow(Rat(3, 2));
    auto base = catalog_trig_base();
    auto partner = catalog_trig_partner();
    auto resid = [&](const PotentialSpec& s) {
        double worst = 0;
        for (int i = 0; i <= 60; ++i) {
            double t = 0.1 + (M_PI - 0.2) * i / 60.0;
            TaylorJet<double> j = psi.jet(t, 2);
            worst = std::max(worst,
                             std::abs(-j.deriv(2) + (s.value(t) - 2.25) * j.deriv(0)));
        }
        return worst;
    };
    b.bound("c10_base_eigenstate", "sin^{3/2} solves the base member at E = 9/4",
            resid(base), 1e-10);
    auto built = trig_partner_build();
    b.bound("c10_partner_built", "Darboux step from the quarter-energy seed "
            "reproduces the partner closed form", built.max_deviation, 1e-10);
    // the attribution discrepancy: the same state does NOT solve the partner
    b.exact("c10_discrepancy_flag",
            "sin^{3/2} at E=9/4 fails in the partner (source text attributes it "
            "there; flagged, not reconciled)",
            resid(partner) > 1e-2);
    // numeric ground state of the partner, reported for the record
    auto left = indicial_endpoint(partner, 0.0, true);
    auto right = indicial_endpoint(partner, M_PI, false);
    auto states = shoot_eigen(partner.value, left, right, -2.0, 26.0, 1, 5e-4);
    b.exact("c10_partner_ground_found", "partner ground state located by shooting",
            states.size() == 1);
    if (states.size() == 1)
        b.report("c10_partner_ground_energy", "partner ground-state energy (numeric)",
                 states[0].energy);
    return b.finish();
}

// ------------------------------------------------------------------ 11
inline CriterionResult criterion_property_suites(double ts) {
    CriterionBuilder b(11, "randomized algebra laws and numeric invariants", ts);
    std::mt19937 rng(20260825);
    auto rand_rat = [&]() {
        std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
        return Rat(num(rng), den(rng));
    };
    auto rand_poly = [&]() {
        std::uniform_int_distribution<int> deg(0, 5);
        std::vector<Rat> c(deg(rng) + 1);
        for (auto& v : c) v = rand_rat();
        return Poly<Rat>(c);
    };
    bool ring_ok = true, deriv_ok = true;
    for (int i = 0; i < 500 && (ring_ok || deriv_ok); ++i) {
        Poly<Rat> p = rand_poly(), q = rand_poly(), r = rand_poly();
        ring_ok = ring_ok && ((p + q) * r - (p * r + q * r)).is_zero();
        ring_ok = ring_ok && (p * q - q * p).is_zero();
        deriv_ok = deriv_ok &&
                   ((p * q).derivative() - (p.derivative() * q + p * q.derivative()))
                       .is_zero();
        Poly<Rat> den = q + Poly<Rat>(Rat(1));  // avoid the zero denominator
        if (!den.is_zero()) {
            RatFn f(p, den);
            RatFn lhs = f.derivative();
            RatFn rhs(p.derivative() * den - p * den.derivative(), den * den);
            deriv_ok = deriv_ok && (lhs - rhs).num.is_zero();
        }
    }
    b.exact("c11_ring_laws", "distributivity and commutativity, 500 random triples",
            ring_ok);
    b.exact("c11_derivative_laws", "product and quotient rules, 500 random pairs",
            deriv_ok);

    // Numerov order: halving h cuts the error by about 16
    auto vf = [](double t) { return -2.0 / std::cosh(t) / std::cosh(t); };
    auto run = [&](double h) {
        int n = (int)(10.0 / h) + 1;
        auto sol = numerov_integrate<double>(vf, -1.0, -5.0, h, n, 1 / std::cosh(-5.0),
                                             1 / std::cosh(-5.0 + h));
        double worst = 0;
        for (size_t i = 0; i < sol.x.size(); ++i)
            worst = std::max(worst, std::abs(sol.psi[i] - 1 / std::cosh(sol.x[i])));
        return worst;
    };
    double ratio = run(0.02) / run(0.01);
    b.exact("c11_numerov_order", "error ratio in (12, 20) under h -> h/2",
            ratio > 12 && ratio < 20);

    // unitarity of analytic and numeric S
    double worst_u = 0;
    for (double k : {0.3, 1.0, 2.7}) {
        worst_u = std::max(worst_u, std::abs(std::abs(smatrix_left(3, k, 1.0)) - 1));
        auto t2 = sech_transmission(2, k);
        worst_u = std::max(worst_u,
                           std::abs(std::norm(t2.t) + std::norm(t2.r) - 1.0));
    }
    b.bound("c11_unitarity", "|S| = 1 and |t|^2 + |r|^2 = 1", worst_u, 1e-6);

    // Wronskian of a solution and its quadrature-built partner is 1
    auto psi1 = jet_fun(exp(Expr::var()));
    auto psi2 = second_solution(psi1, 0.0);
    double worst_w = 0;
    for (double t : {-1.0, 0.5, 2.0}) {
        auto j1 = psi1(t, 1);
        auto j2 = psi2(t, 1);
        double w = j1.deriv(0) * j2.deriv(1) - j1.deriv(1) * j2.deriv(0);
        worst_w = std::max(worst_w, std::abs(std::abs(w) - 1.0));
    }
    b.bound("c11_wronskian", "second-solution Wronskian magnitude vs 1", worst_w, 1e-8);
    return b.finish();
}

}  // namespace detail

inline VerifyReport verify_all(bool strict = false) {
    double ts = strict ? 0.5 : 1.0;
    VerifyReport rep;
    rep.profile = strict ? "strict" : "default";
    rep.criteria = {
        detail::criterion_exact_regeneration(ts),
        detail::criterion_n1_bound_state(ts),
        detail::criterion_reflection_smatrix(ts),
        detail::criterion_constant_phase(ts),
        detail::criterion_confining_spectra(ts),
        detail::criterion_repulsive_span(ts),
        detail::criterion_golden_ratio(ts),
        detail::criterion_reflectionless(ts),
        detail::criterion_kdv(ts),
        detail::criterion_trig_family(ts),
        detail::criterion_property_suites(ts),
    };
    for (const auto& c : rep.criteria) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

}  // namespace darboux
