// Command-line front end: run solvers, execute identity-check suites, apply
// the curvature->envelope maps, and dump the registries.  Exit codes: 0
// success, 1 usage/config/IO, 2 numerical or check failure.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fftw3.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "solgeo/equivalence.hpp"
#include "solgeo/random_fields.hpp"
#include "solgeo/snapshot_io.hpp"
#include "solgeo/solvers.hpp"
#include "solgeo/spin_models.hpp"
#include "solgeo/surface.hpp"

using nlohmann::json;
namespace fs = std::filesystem;
using namespace solgeo;

namespace {

constexpr const char* kToolVersion = "1.0.0";

struct Options {
    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    bool seed_set = false;
    double tol = 0;
    bool tol_set = false;
    bool quiet = false;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json load_config(const Options& o, const char* schema,
                 const std::vector<std::string>& allowed) {
    json c = json::object();
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path);
        if (!in) throw ConfigError("cannot open config: " + o.config_path);
        try {
            c = json::parse(in);
        } catch (const std::exception& e) {
            throw ConfigError(std::string("config parse error: ") + e.what());
        }
        if (!c.is_object()) throw ConfigError("config must be a JSON object");
    }
    if (c.contains("schema") && c["schema"] != schema)
        throw ConfigError("config schema '" + c["schema"].get<std::string>() +
                          "' does not match command '" + schema + "'");
    for (auto& [key, val] : c.items()) {
        (void)val;
        bool ok = false;
        for (const auto& a : allowed) ok = ok || key == a;
        if (!ok) throw ConfigError("unknown config key: " + key);
    }
    return c;
}

fs::path resolve_out(const Options& o, const json& c, const std::string& fallback) {
    if (!o.out_dir.empty()) return o.out_dir;
    if (const char* env = std::getenv("OUTPUT_DIR")) return env;
    if (c.contains("out")) return c.at("out").get<std::string>();
    return fallback;
}

std::uint64_t pick_seed(const Options& o, const json& c, std::uint64_t dflt = 1) {
    if (o.seed_set) return o.seed;
    return c.value("seed", dflt);
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json tool_versions() {
    return {{"solgeo", kToolVersion}, {"fftw", std::string(fftw_version)}};
}

Grid2D grid_from(const json& c) {
    return Grid2D(c.value("nx", 64), c.value("ny", 64), c.value("lx", 2 * pi),
                  c.value("ly", 2 * pi));
}

TimeSteppingConfig stepping_from(const json& c) {
    TimeSteppingConfig s;
    s.dt = c.value("dt", 1e-3);
    s.n_steps = c.value("n_steps", 100);
    s.scheme = c.value("scheme", std::string{});
    s.dealias = c.value("dealias", true);
    s.snapshot_every = c.value("snapshot_every", 1);
    s.blowup_factor = c.value("blowup_factor", 1e3);
    return s;
}

RealField2D real_ic(const json& c, const Grid2D& g, std::uint64_t seed) {
    std::string ic = c.value("ic", "random");
    if (ic == "zero") return RealField2D(g);
    if (ic == "random") {
        BandLimitedOpts o;
        o.kmax = c.value("kmax", 3);
        o.amp = c.value("amplitude", 0.05);
        return band_limited(g, seed, o);
    }
    if (ic == "kp_line_soliton") {
        double kap = c.value("kappa", 0.3), mu = c.value("mu", 2.0);
        double x0 = c.value("x0", g.lx / 2);
        RealField2D q(g);
        for (int iy = 0; iy < g.ny; ++iy)
            for (int ix = 0; ix < g.nx; ++ix) {
                double s = std::fmod(g.x(ix) + mu * g.y(iy) - x0, g.lx);
                if (s < -g.lx / 2) s += g.lx;
                if (s >= g.lx / 2) s -= g.lx;
                double sech = 1.0 / std::cosh(kap * s);
                q.at(ix, iy) = 2 * kap * kap * sech * sech;
            }
        return q;
    }
    if (ic.rfind("snapshot:", 0) == 0) {
        Snapshot s = read_snapshot(ic.substr(9));
        if (s.kind != "real") throw ConfigError("equation needs a real initial field");
        require_same(g, s.grid());
        return s.real_field;
    }
    throw ConfigError("unknown ic: " + ic);
}

ComplexField2D complex_ic(const json& c, const Grid2D& g, std::uint64_t seed) {
    std::string ic = c.value("ic", "random");
    if (ic == "zero") return ComplexField2D(g);
    if (ic == "random") {
        BandLimitedOpts o;
        o.kmax = c.value("kmax", 3);
        o.amp = c.value("amplitude", 0.05);
        return band_limited_complex(g, seed, o);
    }
    if (ic.rfind("snapshot:", 0) == 0) {
        Snapshot s = read_snapshot(ic.substr(9));
        if (s.kind != "complex") throw ConfigError("equation needs a complex initial field");
        require_same(g, s.grid());
        return s.complex_field;
    }
    throw ConfigError("unknown ic: " + ic);
}

void write_conserved_csv(const fs::path& path, const std::vector<double>& times,
                         const std::map<std::string, std::vector<double>>& series) {
    std::ostringstream out;
    out << "time";
    for (const auto& [name, vals] : series) {
        (void)vals;
        out << "," << name;
    }
    out << "\n";
    for (std::size_t i = 0; i < times.size(); ++i) {
        out << fmt(times[i]);
        for (const auto& [name, vals] : series) {
            (void)name;
            out << "," << (i < vals.size() ? fmt(vals[i]) : "");
        }
        out << "\n";
    }
    atomic_write_text(path, out.str());
}

// ---------------------------------------------------------------- run

const std::vector<std::string> kRunKeys = {
    "schema", "out",   "seed",     "nx",        "ny",           "lx",       "ly",
    "n",      "l",     "dt",       "n_steps",   "scheme",       "dealias",  "snapshot_every",
    "blowup_factor",   "ic",       "amplitude", "kmax",         "kappa",    "mu",
    "x0",     "soliton_a", "soliton_b", "alpha2", "alpha",      "beta",     "e_sign"};

int cmd_run(const std::string& eq, const Options& opt) {
    json c;
    const EquationDescriptor* desc = nullptr;
    fs::path out;
    std::uint64_t seed = 1;
    try {
        c = load_config(opt, "run", kRunKeys);
        for (const auto& d : equation_registry())
            if (d.id == eq) desc = &d;
        if (!desc) throw ConfigError("unknown equation: " + eq);
        if (desc->residual_only)
            throw ConfigError("equation is residual-only, nothing to integrate: " + eq);
        out = resolve_out(opt, c, "out_run_" + eq);
        seed = pick_seed(opt, c);
        fs::create_directories(out);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    json manifest = {{"schema", "manifest"}, {"command", "run"},       {"id", eq},
                     {"config", c},          {"seed", seed},           {"out_dir", out.string()},
                     {"versions", tool_versions()}};

    auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    // 1d envelope equation: CSV states, everything else snapshots
    if (eq == "nls") {
        try {
            Grid1D g(c.value("n", 256), c.value("l", 40.0));
            manifest["grid"] = {{"n", g.n}, {"l", g.l}};
            std::vector<cd> q0(g.n, cd(0));
            std::string ic = c.value("ic", "soliton");
            if (ic == "soliton") {
                double a = c.value("soliton_a", 1.0);
                double b = c.value("soliton_b", 2 * pi * 6 / g.l);
                double x0 = c.value("x0", g.l / 4);
                for (int i = 0; i < g.n; ++i) {
                    double xi = g.x(i) - x0;
                    q0[i] = (a / std::cosh(a * xi)) * std::exp(cd(0, b * xi));
                }
            } else if (ic == "random") {
                auto re = band_limited_line(g, seed, c.value("kmax", 3), c.value("amplitude", 0.1));
                auto im = band_limited_line(g, seed + 1, c.value("kmax", 3),
                                            c.value("amplitude", 0.1));
                for (int i = 0; i < g.n; ++i) q0[i] = cd(re[i], im[i]);
            } else if (ic != "zero") {
                throw ConfigError("unknown ic for nls: " + ic);
            }
            Signature sig(c.value("e_sign", 1));

            Trajectory1D traj;
            try {
                traj = solve_nls(q0, g, sig, stepping_from(c));
            } catch (const Error& e) {
                manifest["status"] = "failed";
                manifest["error"] = e.what();
                manifest["wall_clock_s"] = elapsed();
                atomic_write_text(out / "manifest.json", manifest.dump(2) + "\n");
                if (!opt.quiet) std::cerr << "run failed: " << e.what() << "\n";
                return 2;
            }
            for (std::size_t i = 0; i < traj.states.size(); ++i) {
                std::ostringstream body;
                body << "x,re,im\n";
                for (int j = 0; j < g.n; ++j)
                    body << fmt(g.x(j)) << "," << fmt(traj.states[i][j].real()) << ","
                         << fmt(traj.states[i][j].imag()) << "\n";
                char name[32];
                std::snprintf(name, sizeof name, "state_%06zu.csv", i);
                atomic_write_text(out / name, body.str());
            }
            write_conserved_csv(out / "conserved.csv", traj.times, traj.conserved_series);
            manifest["status"] = "completed";
            manifest["n_snapshots"] = traj.states.size();
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return 1;
        }
        manifest["wall_clock_s"] = elapsed();
        atomic_write_text(out / "manifest.json", manifest.dump(2) + "\n");
        if (!opt.quiet)
            std::cout << "run nls: " << manifest["n_snapshots"] << " states -> " << out.string()
                      << "\n";
        return 0;
    }

    Trajectory traj;
    try {
        Grid2D g = grid_from(c);
        manifest["grid"] = {{"nx", g.nx}, {"ny", g.ny}, {"lx", g.lx}, {"ly", g.ly}};
        TimeSteppingConfig sc = stepping_from(c);
        double alpha2 = c.value("alpha2", 1.0);
        double alpha = c.value("alpha", 1.0), beta = c.value("beta", 1.0);
        Signature sig(c.value("e_sign", 1));

        RealField2D rq0;
        ComplexField2D cq0;
        if (desc->state_kind == "real")
            rq0 = real_ic(c, g, seed);
        else
            cq0 = complex_ic(c, g, seed);

        try {
            if (eq == "kp")
                traj = solve_kp(rq0, alpha2, sc);
            else if (eq == "nv")
                traj = solve_nv(rq0, alpha, beta, sc);
            else if (eq == "mnv")
                traj = solve_mnv(rq0, sc);
            else if (eq == "ds")
                traj = solve_ds(cq0, sig, alpha2, sc);
            else if (eq == "strachan")
                traj = solve_strachan(cq0, sig, sc);
            else
                throw ConfigError("unknown equation: " + eq);
        } catch (const Error& e) {
            manifest["status"] = "failed";
            manifest["error"] = e.what();
            manifest["wall_clock_s"] = elapsed();
            atomic_write_text(out / "manifest.json", manifest.dump(2) + "\n");
            if (!opt.quiet) std::cerr << "run failed: " << e.what() << "\n";
            return 2;
        }

        for (std::size_t i = 0; i < traj.states.size(); ++i) {
            char name[32];
            std::snprintf(name, sizeof name, "state_%06zu", i);
            if (desc->state_kind == "real")
                write_real_snapshot(out / name, real_part(traj.states[i]), eq, traj.times[i]);
            else
                write_complex_snapshot(out / name, traj.states[i], eq, traj.times[i]);
        }
        write_conserved_csv(out / "conserved.csv", traj.times, traj.conserved_series);
        manifest["status"] = "completed";
        manifest["n_snapshots"] = traj.states.size();
        for (const auto& [k, v] : traj.diagnostics) manifest["diagnostics"][k] = v;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    manifest["wall_clock_s"] = elapsed();
    atomic_write_text(out / "manifest.json", manifest.dump(2) + "\n");
    if (!opt.quiet)
        std::cout << "run " << eq << ": " << traj.states.size() << " snapshots -> "
                  << out.string() << "\n";
    return 0;
}

// ---------------------------------------------------------------- check

struct CheckEntry {
    const char* id;
    const char* description;
};

const std::vector<CheckEntry>& check_table() {
    static const std::vector<CheckEntry> t = {
        {"zero_curvature", "transverse coefficients from curvature/torsion close the matrix system"},
        {"curve2d", "planar-curve reduction satisfies the matrix compatibility identity"},
        {"mx_kp", "scalar spin frequency reproduces the KP right-hand side"},
        {"mxi_nv", "anisotropic spin frequency reproduces the NV right-hand side"},
        {"mnv_frame", "curvature pipeline vs the third-order flow of the mapped envelope"},
        {"strachan_gauge", "gauge-mapped trajectory satisfies the partner equation"},
        {"lab_triple", "operator-triple identity on the NV flow"},
        {"gauss_codazzi", "surface compatibility residuals on an oracle surface"},
        {"spin_tangency", "every spin model's velocity stays tangent to the sphere"},
    };
    return t;
}

// each check returns {check, params, residuals, tolerances, pass}
json run_one_check(const std::string& id, const json& c, std::uint64_t seed,
                   std::optional<double> tol_override) {
    auto tol = [&](double dflt) { return tol_override ? *tol_override : c.value("tol", dflt); };
    json rep = {{"check", id}, {"seed", seed}};

    if (id == "zero_curvature") {
        Grid2D g(c.value("nx", 64), c.value("ny", 64), c.value("lx", 20 * pi),
                 c.value("ly", 20 * pi));
        auto pair = consistent_curvature(g, seed, c.value("delta", 0.06), c.value("kmax", 3));
        CurvatureData3 cdat{pair.k, pair.tau, Signature(c.value("e_sign", 1))};
        auto r = solve_m_coefficients(cdat, 1e-10, 50, MSolveMethod::Transport,
                                      c.value("substeps", 4));
        double t = tol(1e-8);
        rep["residuals"] = {{"matrix_residual", r.residual},
                            {"closure_obstruction", r.obstruction},
                            {"iterations", r.iterations}};
        rep["tolerances"] = {{"matrix_residual", t}};
        rep["pass"] = r.residual < t;
        return rep;
    }
    if (id == "curve2d") {
        Grid2D g(c.value("nx", 64), c.value("ny", 64), c.value("lx", 4 * pi),
                 c.value("ly", 4 * pi));
        BandLimitedOpts o;
        o.kmax = c.value("kmax", 3);
        o.amp = c.value("amplitude", 0.1);
        o.zero_xmean = true;
        RealField2D k = band_limited(g, seed, o);
        auto m = curve2d_m(k);
        Signature sig(c.value("e_sign", 1));
        Matrix3Field C = build_C({k, RealField2D(g), sig});
        Matrix3Field D = build_D({RealField2D(g), RealField2D(g), m.m}, sig);
        double r = frobenius_max(zero_curvature_residual(C, D, Axis::X, Axis::Y));
        double t = tol(1e-10);
        rep["residuals"] = {{"compatibility", r}, {"m_discarded", m.discarded}};
        rep["tolerances"] = {{"compatibility", t}};
        rep["pass"] = r < t;
        return rep;
    }
    if (id == "mx_kp" || id == "mxi_nv") {
        Grid2D g(c.value("nx", 64), c.value("ny", 64), c.value("lx", 4 * pi),
                 c.value("ly", 4 * pi));
        BandLimitedOpts o;
        o.kmax = c.value("kmax", 3);
        o.amp = c.value("amplitude", 0.1);
        o.zero_xmean = true;
        RealField2D k = band_limited(g, seed, o);
        CheckResult r = id == "mx_kp"
                            ? check_mx_kp(k, c.value("alpha2", 1.0))
                            : check_mxi_nv(k, c.value("alpha", 1.0), c.value("beta", 1.0));
        double t = tol(1e-10);
        rep["residuals"] = {{"linf", r.linf}, {"l2", r.l2}};
        for (const auto& [dk, dv] : r.diagnostics) rep["residuals"][dk] = dv;
        rep["tolerances"] = {{"linf", t}};
        rep["pass"] = r.linf < t;
        return rep;
    }
    if (id == "mnv_frame") {
        Grid2D g(c.value("nx", 96), c.value("ny", 96), c.value("lx", 4 * pi),
                 c.value("ly", 4 * pi));
        double a = c.value("amplitude", 0.05);
        BandLimitedOpts o;
        o.kmax = c.value("kmax", 3);
        o.amp = 1.0;
        RealField2D rho = band_limited(g, seed, o);
        RealField2D k = map1(rho, [a](double r) { return a * (1 + 0.5 * r); });
        MnvFrameReport r = check_mnv_frame(k);
        double t = tol(1e-6);
        rep["residuals"] = {{"k_channel_derived_rel", r.k_channel_derived_rel},
                            {"k_channel_printed_rel", r.k_channel_printed_rel},
                            {"complex_derived_rel", r.complex_derived_rel},
                            {"complex_printed_rel", r.complex_printed_rel},
                            {"modulus_rel", r.modulus_rel},
                            {"printed_minus_consistent_linf", r.printed_minus_consistent_linf},
                            {"decomposition_gap", r.decomposition_gap},
                            {"slaving_defect_ratio", r.slaving_defect_ratio},
                            {"support_fraction", r.support_fraction}};
        for (const auto& [dk, dv] : r.diagnostics) rep["residuals"][dk] = dv;
        rep["tolerances"] = {{"k_channel_derived_rel", t}};
        rep["pass"] = r.k_channel_derived_rel < t;
        return rep;
    }
    if (id == "strachan_gauge") {
        Grid2D g(c.value("nx", 64), c.value("ny", 64), c.value("lx", 2 * pi),
                 c.value("ly", 2 * pi));
        BandLimitedOpts o;
        o.kmax = c.value("kmax", 3);
        o.amp = c.value("amplitude", 0.05);
        ComplexField2D q0 = band_limited_complex(g, seed, o);
        Signature sig(c.value("e_sign", 1));
        TimeSteppingConfig sc;
        sc.dt = c.value("dt", 0.025);
        sc.n_steps = c.value("n_steps", 20);
        sc.snapshot_every = c.value("snapshot_every", 1);
        Trajectory traj = solve_strachan(q0, sig, sc);
        StrachanGaugeReport r = check_strachan_gauge(traj, sig);
        double t = tol(10.0);
        rep["residuals"] = {{"max_ratio", r.max_ratio},
                            {"phase_mean_linf", r.phase_mean_linf}};
        rep["tolerances"] = {{"max_ratio", t}};
        rep["pass"] = r.max_ratio <= t;
        return rep;
    }
    if (id == "lab_triple") {
        Grid2D g(c.value("nx", 64), c.value("ny", 64), 2 * pi, 2 * pi);
        double a = c.value("amplitude", 0.01);
        RealField2D q(g);
        for (int iy = 0; iy < g.ny; ++iy)
            for (int ix = 0; ix < g.nx; ++ix) q.at(ix, iy) = a * std::cos(g.x(ix) + g.y(iy));
        ComplexField2D V = invert_dzbar(3.0 * deriv_z(complexify(q)));
        BandLimitedOpts o;
        o.kmax = 2;
        o.amp = 1.0;
        ComplexField2D f = band_limited_complex(g, seed, o);
        LabTripleResult r = nv_lab_triple_residual(q, V, f);
        LabTripleResult zero = nv_lab_triple_residual(RealField2D(g), ComplexField2D(g), f);
        double t = tol(1e-6);
        rep["residuals"] = {{"relative", r.residual_rel},
                            {"term_scale", r.term_scale},
                            {"zero_case", zero.residual_rel}};
        rep["tolerances"] = {{"relative", t}};
        rep["pass"] = r.residual_rel < t && zero.residual_rel == 0.0;
        return rep;
    }
    if (id == "gauss_codazzi") {
        std::string name = c.value("surface", "torus:2,0.5");
        SurfacePatch p;
        if (name.rfind("graph:", 0) == 0) {
            Snapshot s = read_snapshot(name.substr(6));
            if (s.kind != "real") throw ConfigError("graph surface needs a real height snapshot");
            p = surface_graph(s.grid(), s.real_field);
        } else {
            Grid2D g(c.value("nx", 64), c.value("ny", 64), c.value("lx", 2 * pi),
                     c.value("ly", 2 * pi));
            p = make_named_surface(g, name);
        }
        GaussCodazziResiduals r = gauss_codazzi_residual(p);
        double t = tol(1e-7);
        double worst = std::max({r.gauss_rel, r.codazzi_rel, r.matrix_rel});
        rep["params"] = {{"surface", name}};
        rep["residuals"] = {{"gauss_rel", r.gauss_rel},     {"gauss_linf", r.gauss_linf},
                            {"codazzi_rel", r.codazzi_rel}, {"codazzi_linf", r.codazzi_linf},
                            {"matrix_rel", r.matrix_rel},   {"matrix_linf", r.matrix_linf}};
        rep["tolerances"] = {{"worst_rel", t}};
        rep["pass"] = worst < t;
        return rep;
    }
    if (id == "spin_tangency") {
        Grid2D g(c.value("nx", 64), c.value("ny", 64), 2 * pi, 2 * pi);
        Signature sig(c.value("e_sign", 1));
        // the first-derivative models need even-in-x data so the completed
        // potentials differentiate back exactly
        SpinField s{unit_field(g, seed, c.value("delta", 0.2), c.value("kmax", 3), true), sig};
        ModelParams p;
        p.alpha2 = c.value("alpha2", 1.0);
        json res;
        double worst = 0;
        auto record = [&](const char* model, const SpinRhs& r) {
            double v = linf_norm(dot(s.s, r.s_t));
            res[model] = v;
            worst = std::max(worst, v);
        };
        record("m1", rhs_m1(s));
        record("lle2d", rhs_lle2d(s));
        record("ishimori", rhs_ishimori(s, p));
        record("mxxii", rhs_mxxii(s, p));
        {
            BandLimitedOpts o;
            o.kmax = c.value("kmax", 3);
            o.amp = 0.5;
            RealField2D th = band_limited(g, seed + 17, o);
            SpinField planar{VectorField3(g), sig};
            for (int iy = 0; iy < g.ny; ++iy)
                for (int ix = 0; ix < g.nx; ++ix) {
                    planar.s.c[0].at(ix, iy) = std::cos(th.at(ix, iy));
                    planar.s.c[1].at(ix, iy) = std::sin(th.at(ix, iy));
                }
            record("mxvii", rhs_mxvii(planar));
        }
        double t = tol(1e-9);
        rep["residuals"] = res;
        rep["tolerances"] = {{"tangency", t}};
        rep["pass"] = worst < t;
        return rep;
    }
    throw ConfigError("unknown check: " + id);
}

const std::vector<std::string> kCheckKeys = {
    "schema",  "out",       "seed",    "tol",     "nx",     "ny",      "lx",
    "ly",      "delta",     "kmax",    "substeps", "amplitude", "e_sign", "alpha2",
    "alpha",   "beta",      "surface", "dt",      "n_steps", "snapshot_every"};

int cmd_check(const std::string& id, const Options& opt) {
    json c;
    fs::path out;
    std::vector<std::string> ids;
    try {
        c = load_config(opt, "check", kCheckKeys);
        if (id == "all") {
            for (const auto& e : check_table()) ids.push_back(e.id);
        } else {
            bool known = false;
            for (const auto& e : check_table()) known = known || id == e.id;
            if (!known) throw ConfigError("unknown check: " + id);
            ids.push_back(id);
        }
        out = resolve_out(opt, c, "out_check");
        fs::create_directories(out);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    std::uint64_t seed = pick_seed(opt, c);
    std::optional<double> tov;
    if (opt.tol_set) tov = opt.tol;

    bool all_pass = true;
    for (const auto& cid : ids) {
        json rep;
        try {
            rep = run_one_check(cid, c, seed, tov);
        } catch (const ConfigError& e) {
            std::cerr << e.what() << "\n";
            return 1;
        } catch (const std::exception& e) {
            rep = {{"check", cid}, {"pass", false}, {"error", e.what()}};
        }
        bool pass = rep.value("pass", false);
        all_pass = all_pass && pass;
        atomic_write_text(out / ("check_" + cid + ".json"), rep.dump(2) + "\n");
        if (!opt.quiet) {
            std::cout << (pass ? "[PASS] " : "[FAIL] ") << cid;
            if (rep.contains("error")) std::cout << "  (" << rep["error"].get<std::string>() << ")";
            std::cout << "\n";
        }
    }
    json manifest = {{"schema", "manifest"},   {"command", "check"}, {"id", id},
                     {"config", c},            {"seed", seed},       {"out_dir", out.string()},
                     {"versions", tool_versions()}, {"pass", all_pass}};
    atomic_write_text(out / "manifest.json", manifest.dump(2) + "\n");
    return all_pass ? 0 : 2;
}

// ---------------------------------------------------------------- map

const std::vector<std::string> kMapKeys = {"schema", "out",    "seed", "tol",
                                           "b_gauge", "strict", "tau_snapshot"};

int cmd_map(const std::string& map_id, const std::string& in_stem, const Options& opt) {
    try {
        json c = load_config(opt, "map", kMapKeys);
        fs::path out = resolve_out(opt, c, "out_map_" + map_id);
        Snapshot snap = read_snapshot(in_stem);
        fs::create_directories(out);

        json diag = {{"map", map_id}, {"input", in_stem}, {"time", snap.time}};
        if (map_id == "mnv") {
            if (snap.kind != "real") throw ConfigError("mnv map needs a real curvature snapshot");
            MnvMapResult r = mnv_map(snap.real_field);
            write_real_snapshot(out / "mapped", r.q, "envelope_modulus", snap.time);
            write_real_snapshot(out / "m_aux", r.m, "transverse_coefficient", snap.time);
            diag["m_discarded"] = r.m_discarded;
        } else if (map_id == "gauge_to_strachan" || map_id == "gauge_from_strachan") {
            if (snap.kind != "complex") throw ConfigError(map_id + " needs a complex snapshot");
            GaugeResult r = map_id == "gauge_to_strachan" ? gauge_to_strachan(snap.complex_field)
                                                         : gauge_from_strachan(snap.complex_field);
            write_complex_snapshot(out / "mapped", r.q, "gauged_envelope", snap.time);
            diag["phase_mean_linf"] = r.phase_mean_linf;
        } else if (map_id == "mxxii") {
            if (snap.kind != "real") throw ConfigError("mxxii map needs a real curvature snapshot");
            RealField2D tau(snap.grid());
            if (c.contains("tau_snapshot")) {
                Snapshot ts = read_snapshot(c.at("tau_snapshot").get<std::string>());
                if (ts.kind != "real") throw ConfigError("tau snapshot must be real");
                require_same(snap.grid(), ts.grid());
                tau = ts.real_field;
            }
            MxxiiMapResult r =
                mxxii_map(snap.real_field, tau, c.value("b_gauge", 1.0), c.value("strict", false));
            write_complex_snapshot(out / "mapped", r.q, "envelope", snap.time);
            diag["linear_coeff"] = r.linear_coeff;
            diag["linear_phase_included"] = r.linear_phase_included;
            diag["phase_mean_linf"] = r.phase_mean_linf;
        } else {
            throw ConfigError("unknown map: " + map_id);
        }
        atomic_write_text(out / "map_diagnostics.json", diag.dump(2) + "\n");
        json manifest = {{"schema", "manifest"}, {"command", "map"},  {"id", map_id},
                         {"config", c},          {"input", in_stem},  {"out_dir", out.string()},
                         {"versions", tool_versions()}};
        atomic_write_text(out / "manifest.json", manifest.dump(2) + "\n");
        if (!opt.quiet) std::cout << "map " << map_id << " -> " << out.string() << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}

// ---------------------------------------------------------------- report

int cmd_report(const std::string& run_dir, const Options& opt) {
    try {
        fs::path dir = run_dir;
        std::ifstream min(dir / "manifest.json");
        if (!min) throw ConfigError("no manifest.json in " + run_dir);
        json manifest = json::parse(min);

        json summary = {{"schema", "report"},
                        {"command", manifest.value("command", "?")},
                        {"id", manifest.value("id", "?")},
                        {"status", manifest.value("status", "-")}};

        if (!opt.quiet) {
            std::cout << "run: " << summary["id"].get<std::string>()
                      << "  status: " << summary["status"].get<std::string>() << "\n";
            if (manifest.contains("grid")) std::cout << "grid: " << manifest["grid"].dump() << "\n";
        }

        std::ifstream cin_(dir / "conserved.csv");
        if (cin_) {
            std::string header;
            std::getline(cin_, header);
            std::vector<std::string> cols;
            std::stringstream hs(header);
            for (std::string tok; std::getline(hs, tok, ',');) cols.push_back(tok);
            std::vector<std::vector<double>> rows;
            for (std::string line; std::getline(cin_, line);) {
                if (line.empty()) continue;
                std::vector<double> row;
                std::stringstream ls(line);
                for (std::string tok; std::getline(ls, tok, ',');)
                    row.push_back(tok.empty() ? 0.0 : std::stod(tok));
                rows.push_back(row);
            }
            if (!rows.empty()) {
                json cons;
                for (std::size_t j = 1; j < cols.size(); ++j) {
                    double first = rows.front()[j], last = rows.back()[j], drift = 0;
                    for (const auto& row : rows)
                        drift = std::max(drift, std::abs(row[j] - first));
                    cons[cols[j]] = {{"initial", first}, {"final", last}, {"max_drift", drift}};
                    if (!opt.quiet)
                        std::cout << cols[j] << ": initial " << fmt(first) << "  final "
                                  << fmt(last) << "  max drift " << fmt(drift) << "\n";
                }
                summary["conserved"] = cons;
                summary["n_rows"] = rows.size();
            }
        }
        atomic_write_text(dir / "report.json", summary.dump(2) + "\n");
        return 0;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}

// ---------------------------------------------------------------- list

int cmd_list(const Options& opt) {
    (void)opt;
    std::cout << "equations:\n";
    for (const auto& d : equation_registry())
        std::cout << "  " << d.id << (d.residual_only ? " (residual only)" : "") << "  ["
                  << d.state_kind << "]  " << d.description << "\n";
    std::cout << "spin models:\n";
    for (const auto& m : spin_model_registry()) std::cout << "  " << m.id << "  " << m.description << "\n";
    std::cout << "checks:\n";
    for (const auto& e : check_table()) std::cout << "  " << e.id << "  " << e.description << "\n";
    std::cout << "maps:\n";
    std::cout << "  mnv  curvature -> envelope modulus\n";
    std::cout << "  mxxii  curvature/torsion -> complex envelope (b_gauge, tau_snapshot)\n";
    std::cout << "  gauge_to_strachan  phase gauge, forward\n";
    std::cout << "  gauge_from_strachan  phase gauge, inverse\n";
    std::cout << "surfaces:\n";
    std::cout << "  plane | torus:R,rho | cylinder:circle | graph:<snapshot stem>\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"geometric soliton toolkit: solvers, identity checks, curvature maps"};
    app.require_subcommand(1);

    Options opt;
    std::string eq, check_id, map_id, in_stem, run_dir;
    int rc = 0;

    auto add_common = [&](CLI::App* s) {
        s->add_option("--config", opt.config_path, "JSON config file");
        s->add_option("--out", opt.out_dir, "output directory");
        s->add_option_function<std::uint64_t>(
            "--seed", [&](std::uint64_t v) { opt.seed = v; opt.seed_set = true; }, "seed override");
        s->add_option_function<double>(
            "--tol", [&](double v) { opt.tol = v; opt.tol_set = true; }, "tolerance override");
        s->add_flag("--quiet", opt.quiet, "suppress progress output");
    };

    CLI::App* run = app.add_subcommand("run", "integrate an equation and write artifacts");
    run->add_option("equation", eq, "registry id")->required();
    add_common(run);
    run->callback([&] { rc = cmd_run(eq, opt); });

    CLI::App* check = app.add_subcommand("check", "execute identity checks");
    check->add_option("check_id", check_id, "check id or 'all'")->required();
    add_common(check);
    check->callback([&] { rc = cmd_check(check_id, opt); });

    CLI::App* map = app.add_subcommand("map", "apply a curvature/gauge map to a snapshot");
    map->add_option("map_id", map_id, "map id")->required();
    map->add_option("input", in_stem, "input snapshot stem (no extension)")->required();
    add_common(map);
    map->callback([&] { rc = cmd_map(map_id, in_stem, opt); });

    CLI::App* report = app.add_subcommand("report", "summarize a finished run directory");
    report->add_option("run_dir", run_dir, "run output directory")->required();
    add_common(report);
    report->callback([&] { rc = cmd_report(run_dir, opt); });

    CLI::App* list = app.add_subcommand("list", "dump the registries");
    add_common(list);
    list->callback([&] { rc = cmd_list(opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return rc;
}
