// Command-line frontend: tabulates potentials and wavefunctions, runs the
// spectral and scattering solvers, checks the KdV candidates, and runs the
// full verification suite.  Output is CSV or JSON with a fixed 12-digit
// scientific float format, so identical invocations are byte-identical.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "darboux/io.hpp"
#include "darboux/kdv.hpp"
#include "darboux/scattering.hpp"
#include "darboux/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace darboux;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

int thread_cap() {
    if (const char* e = std::getenv("DARBOUX_THREADS")) {
        int v = std::atoi(e);
        if (v > 0) return v;
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? (int)h : 1;
}

// ordered results: worker i writes slot i, assembly stays single-threaded
template <class F>
void parallel_for(int n, F body) {
    int nt = std::min(thread_cap(), n);
    if (nt <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next(0);
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t)
        pool.emplace_back([&] {
            for (int i = next++; i < n; i = next++) body(i);
        });
    for (auto& th : pool) th.join();
}

Rat parse_rat(const std::string& s) {
    using boost::multiprecision::cpp_int;
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(cpp_int(s));
        return Rat(cpp_int(s.substr(0, slash)), cpp_int(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--mu expects an integer or a fraction p/q, got " + s);
    }
}

struct CommonOpts {
    std::string family = "32";
    int n = 1;
    std::string mu = "1";
    std::string side = "right";
    std::string out;
    std::string format = "csv";
};

void emit(const CsvTable& table, const CommonOpts& o) {
    std::ostringstream os;
    if (o.format == "json")
        os << table.to_json().dump(2) << "\n";
    else
        table.write(os);
    write_output(os.str(), o.out);
}

PotentialSpec spec_from(const CommonOpts& o) {
    CatalogParams p;
    p.n = o.n;
    p.mu = parse_rat(o.mu);
    return catalog_get(o.family, p);
}

// finite-difference slope of stitched (piecewise-uniform) samples
std::vector<double> sampled_derivative(const std::vector<double>& x,
                                       const std::vector<double>& y) {
    std::vector<double> d(x.size(), 0.0);
    for (size_t i = 0; i < x.size(); ++i) {
        size_t lo = i > 0 ? i - 1 : i;
        size_t hi = i + 1 < x.size() ? i + 1 : i;
        d[i] = (y[hi] - y[lo]) / (x[hi] - x[lo]);
    }
    return d;
}

int cmd_potential(const CommonOpts& o, std::vector<double> range, int samples) {
    PotentialSpec spec = spec_from(o);
    CsvTable t;
    t.header = {"x", "V", "pole"};
    double lo = range[0], hi = range[1];
    double step = (hi - lo) / (samples - 1);
    for (int i = 0; i < samples; ++i) {
        double x = lo + step * i;
        bool at_pole = false;
        for (const auto& p : spec.poles)
            at_pole = at_pole || std::abs(x - p.location) <= 0.5 * step;
        if (at_pole) {
            t.rows.push_back({sci12(x), "", "1"});
        } else {
            t.rows.push_back({sci12(x), sci12(spec.value(x)), "0"});
        }
    }
    emit(t, o);
    return 0;
}

int cmd_boundstate(const CommonOpts& o) {
    PotentialSpec spec = spec_from(o);
    BoundState st;
    if (spec.family == "32") {
        if (spec.n == 1) {
            auto left = indicial_endpoint(spec, spec.poles.front().location, true);
            auto states = shoot_eigen(spec.value, left, cutoff_endpoint(40.0), -5.0,
                                      -0.01, 3, 1e-3);
            if (states.size() != 1)
                throw std::runtime_error("expected exactly one bound state");
            st = states[0];
        } else {
            st = zero_energy_bound_state(spec.n, parse_rat(o.mu));
        }
    } else if (spec.family == "44") {
        auto left = indicial_endpoint(spec, 0.0, true);
        auto right = indicial_endpoint(spec, M_PI, false);
        auto states = shoot_eigen(spec.value, left, right, -2.0, 26.0, 1, 5e-4);
        if (states.size() != 1) throw std::runtime_error("ground state not found");
        st = states[0];
    } else {
        throw CLI::ValidationError("boundstate supports --family 32 (any n) and 44");
    }
    auto dpsi = sampled_derivative(st.x, st.psi);
    CsvTable t;
    t.header = {"x", "psi", "dpsi"};
    for (size_t i = 0; i < st.x.size(); ++i)
        t.rows.push_back({sci12(st.x[i]), sci12(st.psi[i]), sci12(dpsi[i])});
    if (o.format == "json") {
        json out{{"energy", sci12(st.energy)},
                 {"nodes", st.nodes},
                 {"samples", t.to_json()}};
        write_output(out.dump(2) + "\n", o.out);
    } else {
        std::ostringstream os;
        os << "# energy," << sci12(st.energy) << "\n";
        t.write(os);
        write_output(os.str(), o.out);
    }
    return 0;
}

int cmd_spectrum(const CommonOpts& o, int count) {
    Rat mu = parse_rat(o.mu);
    auto eq = spectral_equation_build(o.n);
    auto roots = spectral_roots(eq, count);
    double c = std::pow(to_double(mu), 1.0 / (2 * o.n + 1));

    int ncross = std::min<int>(count, 10);
    std::vector<double> cross;
    if (ncross > 0) {
        auto spec = catalog_three_region(o.n, mu);
        auto left = indicial_endpoint(spec, -c, true);
        auto right = indicial_endpoint(spec, 0.0, false);
        auto states = shoot_eigen(spec.value, left, right, 1e-3,
                                  roots[ncross - 1].energy(c) * 1.05, ncross, 5e-4);
        for (const auto& s : states) cross.push_back(s.energy);
    }
    CsvTable t;
    t.header = {"m", "kappa", "energy", "energy_numerov"};
    for (int i = 0; i < (int)roots.size(); ++i) {
        std::string nv = i < (int)cross.size() ? sci12(cross[i]) : "";
        t.rows.push_back({std::to_string(roots[i].index), sci12(roots[i].kappa),
                          sci12(roots[i].energy(c)), nv});
    }
    emit(t, o);
    return 0;
}

int cmd_phaseshift(const CommonOpts& o, double kmin, double kmax, int count) {
    PotentialSpec spec = spec_from(o);
    std::vector<double> ks(count);
    for (int i = 0; i < count; ++i)
        ks[i] = count == 1 ? kmin : kmin * std::pow(kmax / kmin, double(i) / (count - 1));
    std::vector<ScatteringSample> samples(count);
    parallel_for(count, [&](int i) {
        samples[i] = numeric_phase_shift(spec, o.side, ks[i]);
    });
    // unwrap the half-argument by continuity from the low-k end
    std::vector<double> deltas(count);
    for (int i = 0; i < count; ++i) {
        double d = 0.5 * std::arg(samples[i].S);
        if (i > 0) d += M_PI * std::round((deltas[i - 1] - d) / M_PI);
        deltas[i] = d;
    }
    CsvTable t;
    t.header = {"k", "ReS", "ImS", "delta_unwrapped", "piece"};
    for (int i = 0; i < count; ++i)
        t.rows.push_back({sci12(ks[i]), sci12(samples[i].S.real()),
                          sci12(samples[i].S.imag()), sci12(deltas[i]),
                          samples[i].piece});
    emit(t, o);
    return 0;
}

int cmd_kdv_check(const std::string& candidate, const CommonOpts& o) {
    json out;
    out["candidate"] = candidate;
    if (candidate == "eqB3" || candidate == "rational") {
        out["exact"] = kdv_residual(kdv_rational_solution()).num.is_zero();
        out["max_numeric_residual"] = 0.0;
    } else if (candidate == "static") {
        out["exact"] = kdv_residual(kdv_static_solution()).num.is_zero();
        out["max_numeric_residual"] = 0.0;
    } else if (candidate == "soliton") {
        out["exact"] = false;
        out["max_numeric_residual"] = kdv_soliton_residual(Rat(1), Rat(0), -8, 8);
    } else {
        throw CLI::ValidationError("--candidate must be eqB3, static, or soliton");
    }
    write_output(out.dump(2) + "\n", o.out);
    bool ok = out["exact"].get<bool>() ||
              out["max_numeric_residual"].get<double>() < 1e-10;
    return ok ? 0 : kExitVerifyFail;
}

int cmd_verify_all(const std::string& tolerance, const CommonOpts& o) {
    VerifyReport rep = verify_all(tolerance == "strict");
    json out;
    out["profile"] = rep.profile;
    out["all_pass"] = rep.all_pass;
    out["criteria"] = json::array();
    for (const auto& c : rep.criteria) {
        json jc{{"index", c.index},
                {"title", c.title},
                {"pass", c.pass},
                {"seconds", c.seconds},
                {"checks", json::array()}};
        for (const auto& chk : c.checks)
            jc["checks"].push_back({{"id", chk.id},
                                    {"claim", chk.claim},
                                    {"computed", sci12(chk.computed)},
                                    {"reference", sci12(chk.reference)},
                                    {"tolerance", sci12(chk.tolerance)},
                                    {"pass", chk.pass}});
        out["criteria"].push_back(jc);
    }
    write_output(out.dump(2) + "\n", o.out);
    return rep.all_pass ? 0 : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"solvable-potential laboratory: catalog tables, spectra, phase "
                 "shifts, and verification"};
    app.require_subcommand(1);

    CommonOpts o;
    std::vector<double> range{-3.0, 4.0};
    int samples = 200, count = 10;
    double kmin = 0.05, kmax = 20.0;
    std::string candidate = "eqB3", tolerance = "default";

    auto add_common = [&](CLI::App* sub, bool with_family = true) {
        if (with_family) sub->add_option("--family", o.family, "family id");
        sub->add_option("--n", o.n, "chain depth n");
        sub->add_option("--mu", o.mu, "deformation parameter (integer or p/q)");
        sub->add_option("--out", o.out, "output path (default stdout)");
        sub->add_option("--format", o.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    auto* sp = app.add_subcommand("potential", "tabulate V(x); pole rows flagged");
    add_common(sp);
    sp->add_option("--range", range, "x range: lo hi")->expected(2);
    sp->add_option("--samples", samples, "number of rows")->check(CLI::PositiveNumber);

    auto* sb = app.add_subcommand("boundstate", "bound-state wavefunction dump");
    add_common(sb);

    auto* ss = app.add_subcommand("spectrum",
                                  "confining-region levels with a Numerov cross-check");
    add_common(ss, false);
    ss->add_option("--count", count, "number of levels")->check(CLI::PositiveNumber);

    auto* sf = app.add_subcommand("phaseshift", "S(k) and unwrapped phase on a k-grid");
    add_common(sf);
    sf->add_option("--side", o.side, "left or right")
        ->check(CLI::IsMember({"left", "right"}));
    sf->add_option("--kmin", kmin, "lowest momentum");
    sf->add_option("--kmax", kmax, "highest momentum");
    sf->add_option("--count", count, "grid points")->check(CLI::PositiveNumber);

    auto* sk = app.add_subcommand("kdv-check", "KdV candidate verdict as JSON");
    sk->add_option("--candidate", candidate, "eqB3, static, or soliton");
    sk->add_option("--out", o.out, "output path (default stdout)");

    auto* sv = app.add_subcommand("verify-all", "run the full verification suite");
    sv->add_option("--tolerance", tolerance, "default or strict")
        ->check(CLI::IsMember({"default", "strict"}));
    sv->add_option("--out", o.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (sp->parsed()) return cmd_potential(o, range, samples);
        if (sb->parsed()) return cmd_boundstate(o);
        if (ss->parsed()) return cmd_spectrum(o, count);
        if (sf->parsed()) {
            if (sf->count("--count") == 0) count = 60;
            return cmd_phaseshift(o, kmin, kmax, count);
        }
        if (sk->parsed()) return cmd_kdv_check(candidate, o);
        if (sv->parsed()) return cmd_verify_all(tolerance, o);
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitVerifyFail;
    }
    return kExitUsage;
}
