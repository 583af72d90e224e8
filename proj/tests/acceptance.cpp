// Acceptance gate for the toolkit: fourteen end-to-end criteria, one verdict
// line each.  Tolerances are pinned here, in code, next to the measurement
// they gate.  Detail lines under each verdict print the measured numbers so a
// failure is diagnosable from the log alone.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "solgeo/equivalence.hpp"
#include "solgeo/errors.hpp"
#include "solgeo/random_fields.hpp"
#include "solgeo/snapshot_io.hpp"
#include "solgeo/solvers.hpp"
#include "solgeo/spin_models.hpp"
#include "solgeo/surface.hpp"

using namespace solgeo;

namespace {

int g_failures = 0;

void verdict(int num, const char* label, bool pass) {
    std::printf("[%s] criterion %02d: %s\n", pass ? "PASS" : "FAIL", num, label);
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double mat_linf(const Matrix3Field& m) {
    double w = 0;
    for (const auto& f : m.e) w = std::max(w, linf_norm(f));
    return w;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// 1. single-mode spectral derivatives at the floor; x-antiderivative inverts
//    the x-derivative exactly on the zero-x-mean subspace
bool criterion01() {
    Grid2D g(64, 64, 2 * pi, 2 * pi);
    RealField2D f(g);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix)
            f.at(ix, iy) = std::sin(3 * g.x(ix)) * std::cos(2 * g.y(iy));
    RealField2D fx = deriv_x(f);
    double e_mode = 0;
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix)
            e_mode = std::max(e_mode, std::abs(fx.at(ix, iy) -
                                               3 * std::cos(3 * g.x(ix)) * std::cos(2 * g.y(iy))));

    BandLimitedOpts o;
    o.kmax = 5;
    RealField2D h = band_limited(g, 1, o);
    RealField2D proj = h - xmean_field(h);
    double e_da = linf_norm(deriv_x(antideriv_x(h).value) - proj);
    double e_ad = linf_norm(antideriv_x(deriv_x(h)).value - proj);

    std::printf("      single-mode d/dx error      %.3e  (tol 1e-12)\n", e_mode);
    std::printf("      d/dx after x-antideriv      %.3e  (tol 1e-12)\n", e_da);
    std::printf("      x-antideriv after d/dx      %.3e  (tol 1e-12)\n", e_ad);
    return e_mode < 1e-12 && e_da < 1e-12 && e_ad < 1e-12;
}

// ---------------------------------------------------------------------------
// 2. transverse-coefficient solve on compatible random curvature/torsion:
//    bounded iterations, compatibility residual at target, under one second
bool criterion02() {
    Grid2D g(64, 64, 20 * pi, 20 * pi);
    CurvaturePair pair = consistent_curvature(g, 3, 0.06, 3);
    CurvatureData3 cdat{pair.k, pair.tau, Signature(+1)};

    auto t0 = std::chrono::steady_clock::now();
    MSolveReport rep = solve_m_coefficients(cdat, 1e-10, 50, MSolveMethod::Transport, 4);
    double secs = seconds_since(t0);

    Matrix3Field C = build_C(cdat);
    Matrix3Field D = build_D(rep.m, cdat.sig);
    double resid = mat_linf(zero_curvature_residual(C, D, Axis::X, Axis::Y));

    std::printf("      curvature amplitude         %.3e / %.3e (k / tau)\n", linf_norm(pair.k),
                linf_norm(pair.tau));
    std::printf("      iterations                  %d  (limit 50)\n", rep.iterations);
    std::printf("      compatibility residual      %.3e  (tol 1e-8)\n", resid);
    std::printf("      closure obstruction         %.3e\n", rep.obstruction);
    std::printf("      wall clock                  %.3f s  (limit 1 s)\n", secs);
    return rep.iterations <= 50 && resid < 1e-8 && secs < 1.0;
}

// ---------------------------------------------------------------------------
// 3. planar-curve reduction: with the transverse coefficient slaved to the
//    x-antiderivative of k_y, the two coefficient matrices are compatible
bool criterion03() {
    Grid2D g(64, 64, 4 * pi, 4 * pi);
    BandLimitedOpts o;
    o.kmax = 3;
    o.amp = 0.1;
    o.zero_xmean = true;
    RealField2D k = band_limited(g, 7, o);
    Curve2dM cm = curve2d_m(k);

    CurvatureData3 cdat{k, RealField2D(g), Signature(+1)};
    DCoefficients dc{RealField2D(g), RealField2D(g), cm.m};
    Matrix3Field C = build_C(cdat);
    Matrix3Field D = build_D(dc, cdat.sig);
    double resid = mat_linf(zero_curvature_residual(C, D, Axis::X, Axis::Y));

    std::printf("      compatibility residual      %.3e  (tol 1e-10)\n", resid);
    std::printf("      discarded line means        %.3e\n", cm.discarded);
    return resid < 1e-10;
}

// ---------------------------------------------------------------------------
// 4. d/dx of the planar spin frequency equals the KP right-hand side on q = k
bool criterion04() {
    Grid2D g(64, 64, 4 * pi, 4 * pi);
    BandLimitedOpts o;
    o.kmax = 3;
    o.amp = 0.1;
    o.zero_xmean = true;
    o.zero_ymean = true;
    double worst = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        RealField2D k = band_limited(g, seed, o);
        worst = std::max(worst, check_mx_kp(k, 1.0).linf);
    }
    std::printf("      worst residual, 10 seeds    %.3e  (tol 1e-10)\n", worst);
    return worst < 1e-10;
}

// ---------------------------------------------------------------------------
// 5. same gate for the anisotropic third-order frequency against NV
bool criterion05() {
    Grid2D g(64, 64, 4 * pi, 4 * pi);
    BandLimitedOpts o;
    o.kmax = 3;
    o.amp = 0.1;
    o.zero_xmean = true;
    o.zero_ymean = true;
    double worst = 0, worst_gap = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        RealField2D k = band_limited(g, seed, o);
        CheckResult r = check_mxi_nv(k, 1.0, 1.0);
        worst = std::max(worst, r.linf);
        worst_gap = std::max(worst_gap, r.diagnostics.at("constraint_gap"));
    }
    std::printf("      worst residual, 10 seeds    %.3e  (tol 1e-10)\n", worst);
    std::printf("      worst constraint gap        %.3e\n", worst_gap);
    return worst < 1e-10;
}

// ---------------------------------------------------------------------------
// 6. cubic-envelope soliton over one transit of the box: shape and mass
bool criterion06() {
    Grid1D g(256, 40.0);
    double a = 1.0, b = 2 * pi * 6 / g.l, x0 = g.l / 2;
    std::vector<cd> q0(g.n);
    for (int i = 0; i < g.n; ++i) {
        double xi = g.x(i) - x0;
        q0[i] = (a / std::cosh(a * xi)) * std::exp(cd(0, b * xi));
    }
    TimeSteppingConfig cfg;
    cfg.dt = 1e-3;
    cfg.n_steps = int(std::lround(g.l / (2 * b) / cfg.dt));  // one transit at speed 2b
    cfg.snapshot_every = cfg.n_steps;
    Trajectory1D traj = solve_nls(q0, g, Signature(+1), cfg);

    double t = cfg.dt * cfg.n_steps;
    double shape = 0;
    for (int i = 0; i < g.n; ++i) {
        double s = std::fmod(g.x(i) - 2 * b * t - x0, g.l);
        if (s < -g.l / 2) s += g.l;
        if (s >= g.l / 2) s -= g.l;
        cd exact = (a / std::cosh(a * s)) * std::exp(cd(0, b * s + (a * a + b * b) * t));
        shape = std::max(shape, std::abs(traj.states.back()[i] - exact));
    }
    const auto& mass = traj.conserved_series.at("mass");
    double drift = std::abs(mass.back() - mass.front());

    std::printf("      transit time                %.4f  (%d steps)\n", t, cfg.n_steps);
    std::printf("      shape error                 %.3e  (tol 1e-6)\n", shape);
    std::printf("      mass drift                  %.3e  (tol 1e-10)\n", drift);
    return shape < 1e-6 && drift < 1e-10;
}

// ---------------------------------------------------------------------------
// 7. KP line soliton: stationary in the traveling frame at t = 0, holds shape
//    over 0.1 time units, conserves the integral, under a minute
bool criterion07() {
    Grid2D g(256, 128, 80.0, 40.0);
    double kap = 0.3, mu = 2.0, a2 = 1.0;
    double c = -(4 * kap * kap + 3 * a2 * mu * mu);
    auto soliton = [&](double t) {
        RealField2D q(g);
        for (int iy = 0; iy < g.ny; ++iy)
            for (int ix = 0; ix < g.nx; ++ix) {
                double s = std::fmod(g.x(ix) + mu * g.y(iy) - c * t - g.lx / 2, g.lx);
                if (s < -g.lx / 2) s += g.lx;
                if (s >= g.lx / 2) s -= g.lx;
                double sech = 1.0 / std::cosh(kap * s);
                q.at(ix, iy) = 2 * kap * kap * sech * sech;
            }
        return q;
    };
    RealField2D q0 = soliton(0.0);
    double t0_resid =
        linf_norm(real_part(rhs_kp(complexify(q0), a2)) - (-c) * deriv_x(q0));

    TimeSteppingConfig cfg;
    cfg.dt = 2e-3;
    cfg.n_steps = 50;
    cfg.snapshot_every = 50;
    auto tic = std::chrono::steady_clock::now();
    Trajectory traj = solve_kp(q0, a2, cfg);
    double secs = seconds_since(tic);

    double T = cfg.dt * cfg.n_steps;
    double shape = linf_norm(real_part(traj.states.back()) - soliton(T));
    const auto& intq = traj.conserved_series.at("int_q");
    double drift = std::abs(intq.back() - intq.front());

    std::printf("      frame speed                 %.4f\n", c);
    std::printf("      t=0 traveling residual      %.3e  (tol 1e-8)\n", t0_resid);
    std::printf("      shape error at t=%.1f       %.3e  (tol 1e-4)\n", T, shape);
    std::printf("      field-integral drift        %.3e  (tol 1e-8)\n", drift);
    std::printf("      wall clock                  %.2f s  (limit 60 s)\n", secs);
    return t0_resid < 1e-8 && shape < 1e-4 && drift < 1e-8 && secs < 60.0;
}

// ---------------------------------------------------------------------------
// 8. real third-order flow: state stays real, the linearization carries the
//    third-order symbol, and the stepper converges at fourth order
bool criterion08() {
    // reality + convergence on a generic band-limited state
    Grid2D g(96, 96, 4 * pi, 4 * pi);
    BandLimitedOpts o;
    o.kmax = 3;
    o.amp = 0.05;
    RealField2D q0 = band_limited(g, 1, o);
    auto run = [&](double dt) {
        TimeSteppingConfig cfg;
        cfg.dt = dt;
        cfg.n_steps = int(std::lround(0.2 / dt));
        cfg.snapshot_every = cfg.n_steps;
        return solve_mnv(q0, cfg);
    };
    Trajectory ref = run(1e-3);
    Trajectory t4 = run(4e-3);
    Trajectory t2 = run(2e-3);
    double e4 = linf_norm(real_part(t4.states.back()) - real_part(ref.states.back()));
    double e2 = linf_norm(real_part(t2.states.back()) - real_part(ref.states.back()));
    double ratio = e4 / std::max(e2, 1e-300);
    double imag_leak = std::max(ref.diagnostics.at("max_imag"),
                                std::max(t4.diagnostics.at("max_imag"),
                                         t2.diagnostics.at("max_imag")));

    // linear limit: one Fourier mode advances by the cubic dispersion phase
    Grid2D gl(64, 64, 2 * pi, 2 * pi);
    int jx = 2, jy = 3;
    double kx = gl.kx(jx), ky = gl.ky(jy), eps = 1e-8;
    ComplexField2D m0(gl);
    for (int iy = 0; iy < gl.ny; ++iy)
        for (int ix = 0; ix < gl.nx; ++ix)
            m0.at(ix, iy) = eps * std::exp(cd(0, kx * gl.x(ix) + ky * gl.y(iy)));
    TimeSteppingConfig lcfg;
    lcfg.dt = 1e-3;
    lcfg.n_steps = 50;
    lcfg.snapshot_every = 50;
    Trajectory lt = solve_mnv(real_part(m0), lcfg);
    double om = kx * (3 * ky * ky - kx * kx) / 4;  // symbol of (dx^3 - 3 dx dy^2)/4
    double Tl = lcfg.dt * lcfg.n_steps;
    double phase_err = 0;
    for (int iy = 0; iy < gl.ny; ++iy)
        for (int ix = 0; ix < gl.nx; ++ix) {
            double exact = eps * std::cos(kx * gl.x(ix) + ky * gl.y(iy) + om * Tl);
            phase_err = std::max(phase_err,
                                 std::abs(lt.states.back().at(ix, iy).real() - exact));
        }
    phase_err /= eps;

    std::printf("      imaginary leak              %.3e  (tol 1e-10)\n", imag_leak);
    std::printf("      linear-phase error          %.3e  (tol 1e-9)\n", phase_err);
    std::printf("      step errors 4dt/2dt         %.3e / %.3e\n", e4, e2);
    std::printf("      convergence ratio           %.1f  (needs >= 12)\n", ratio);
    return imag_leak < 1e-10 && phase_err < 1e-9 && ratio >= 12.0;
}

// ---------------------------------------------------------------------------
// 9. curvature -> envelope pipeline.  The flow-consistent frequency assembly
//    drives the curvature channel to the target; the traditional printed
//    coefficient set does not, and the gap is isolated in closed form.
bool criterion09() {
    Grid2D g(96, 96, 4 * pi, 4 * pi);
    BandLimitedOpts o;
    o.kmax = 3;
    o.amp = 1.0;
    o.zero_xmean = true;
    RealField2D rho = band_limited(g, 3, o);
    auto field_at = [&](double a) {
        return map1(rho, [a](double r) { return a * (1.0 + 0.5 * r); });
    };

    bool pass = true;
    double slaving[3] = {0, 0, 0};
    const double amps[3] = {0.1, 0.05, 0.025};
    for (int i = 0; i < 3; ++i) {
        MnvFrameReport rep = check_mnv_frame(field_at(amps[i]));
        slaving[i] = rep.slaving_defect_ratio;
        if (i == 0) continue;  // a = 0.1 only feeds the trend line below
        std::printf("      amplitude %.3f:\n", amps[i]);
        std::printf("        consistent assembly, k-channel   %.3e  (tol 1e-6)\n",
                    rep.k_channel_derived_rel);
        std::printf("        printed assembly,    k-channel   %.3e  (persistent)\n",
                    rep.k_channel_printed_rel);
        std::printf("        two-component, consistent        %.3e\n", rep.complex_derived_rel);
        std::printf("        two-component, printed           %.3e\n", rep.complex_printed_rel);
        std::printf("        scalar-modulus reading           %.3e  (structural)\n",
                    rep.modulus_rel);
        std::printf("        printed-minus-consistent         %.3e  (frequency scale %.3e)\n",
                    rep.printed_minus_consistent_linf, rep.diagnostics.at("omega_scale"));
        std::printf("        closed-form gap of difference    %.3e  (tol 1e-9)\n",
                    rep.decomposition_gap);
        pass = pass && rep.k_channel_derived_rel < 1e-6 && rep.decomposition_gap < 1e-9;
    }
    std::printf("      the printed local cubic/coupling group (3/16 k^3 - 5/16 k m^2\n");
    std::printf("      minus an x-antiderivative coupling term) accounts for the whole\n");
    std::printf("      printed-route discrepancy, to the gap printed above.\n");
    std::printf("      slaving defect at amp 0.1/0.05/0.025: %.3e / %.3e / %.3e\n", slaving[0],
                slaving[1], slaving[2]);
    std::printf("      (quadratic decay: a genuine O(amp^2) defect of the printed set,\n");
    std::printf("      not a discretization artifact)\n");
    return pass;
}

// ---------------------------------------------------------------------------
// 10. operator-triple identity: closes with the linear potential constraint,
//     is exactly zero on zero input; the quadratic constraint is reported
bool criterion10() {
    Grid2D g(64, 64, 2 * pi, 2 * pi);
    RealField2D q(g);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix)
            q.at(ix, iy) = 0.01 * std::cos(g.x(ix) + g.y(iy));
    BandLimitedOpts o;
    o.kmax = 2;
    o.amp = 1.0;
    ComplexField2D f = band_limited_complex(g, 6, o);

    ComplexField2D v_lin = invert_dzbar(3.0 * deriv_z(complexify(q)));
    ComplexField2D v_quad = invert_dzbar(3.0 * deriv_z(complexify(q * q)));
    LabTripleResult lin = nv_lab_triple_residual(q, v_lin, f);
    LabTripleResult quad = nv_lab_triple_residual(q, v_quad, f);
    LabTripleResult zero = nv_lab_triple_residual(RealField2D(g), ComplexField2D(g), f);

    std::printf("      linear potential constraint      %.3e  (tol 1e-6)\n", lin.residual_rel);
    std::printf("      quadratic potential constraint   %.3e  (diagnostic: does not close)\n",
                quad.residual_rel);
    std::printf("      zero input                       %.3e  (must be exactly 0)\n",
                zero.residual_rel);
    return lin.residual_rel < 1e-6 && zero.residual_rel == 0.0;
}

// ---------------------------------------------------------------------------
// 11. gauge partnership of the bilinear-envelope flows: mapped snapshots
//     satisfy the partner equation at matched residual order, and both
//     residual series converge at fourth order in dt
bool criterion11() {
    Grid2D g(64, 64, 2 * pi, 2 * pi);
    BandLimitedOpts o;
    o.kmax = 3;

    o.amp = 0.05;
    ComplexField2D qa = band_limited_complex(g, 4, o);
    TimeSteppingConfig ca;
    ca.dt = 0.025;
    ca.n_steps = 20;
    ca.snapshot_every = 1;
    StrachanGaugeReport ra = check_strachan_gauge(solve_strachan(qa, Signature(+1), ca),
                                                  Signature(+1));
    std::printf("      mapped/self residual ratio  %.2f  (limit 10)\n", ra.max_ratio);

    o.amp = 0.0015;
    ComplexField2D qb = band_limited_complex(g, 4, o);
    const double dts[3] = {0.04, 0.02, 0.01};
    double rs[3], rm[3];
    for (int i = 0; i < 3; ++i) {
        TimeSteppingConfig cb;
        cb.dt = dts[i];
        cb.n_steps = int(std::lround(0.8 / dts[i]));
        cb.snapshot_every = 1;
        StrachanGaugeReport r = check_strachan_gauge(solve_strachan(qb, Signature(+1), cb),
                                                     Signature(+1));
        rs[i] = 0;
        rm[i] = 0;
        for (const auto& s : r.self_series) rs[i] = std::max(rs[i], s.l2);
        for (const auto& s : r.mapped_series) rm[i] = std::max(rm[i], s.l2);
    }
    double os1 = std::log2(rs[0] / rs[1]), os2 = std::log2(rs[1] / rs[2]);
    double om1 = std::log2(rm[0] / rm[1]), om2 = std::log2(rm[1] / rm[2]);
    std::printf("      self residual orders        %.2f / %.2f  (need >= 3.4)\n", os1, os2);
    std::printf("      mapped residual orders      %.2f / %.2f  (need >= 3.4)\n", om1, om2);

    return ra.max_ratio <= 10.0 && os1 >= 3.4 && os2 >= 3.4 && om1 >= 3.4 && om2 >= 3.4;
}

// ---------------------------------------------------------------------------
// 12. surface compatibility on the torus, and the residual actually reacts
//     to a 1% tamper of one second-form coefficient
bool criterion12() {
    Grid2D g(64, 64, 2 * pi, 2 * pi);
    SurfacePatch p = surface_torus(g, 2.0, 0.5);
    GaussCodazziResiduals r = gauss_codazzi_residual(p);
    double worst = std::max(r.gauss_rel, std::max(r.codazzi_rel, r.matrix_rel));

    FundamentalForms ff = fundamental_forms(p);
    ff.l_form = 1.01 * ff.l_form;
    double tampered = gauss_codazzi_from_forms(ff).gauss_rel;

    std::printf("      gauss/codazzi/matrix rel    %.3e / %.3e / %.3e  (tol 1e-7)\n",
                r.gauss_rel, r.codazzi_rel, r.matrix_rel);
    std::printf("      1%% tampered gauss rel       %.3e  (needs >= 3e-3)\n", tampered);
    return worst < 1e-7 && tampered >= 3e-3;
}

// ---------------------------------------------------------------------------
// 13. constant-curvature line frame: integrates to a closed circle with an
//     orthonormal triad everywhere
bool criterion13() {
    Grid1D g(256, 2 * pi);
    std::vector<double> k(g.n, 1.0), tau(g.n, 0.0);
    std::array<double, 9> eye{1, 0, 0, 0, 1, 0, 0, 0, 1};
    FrameLine fl = reconstruct_frame_x(g, k, tau, eye, Signature(+1));

    double closure = 0;
    for (int c = 0; c < 9; ++c)
        closure = std::max(closure, std::abs(fl.rot.back()[c] - fl.rot.front()[c]));

    double ortho = 0;
    for (const auto& R : fl.rot)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double d = 0;
                for (int s = 0; s < 3; ++s) d += R[3 * i + s] * R[3 * j + s];
                ortho = std::max(ortho, std::abs(d - (i == j ? 1.0 : 0.0)));
            }

    std::printf("      period-closure defect       %.3e  (tol 1e-8)\n", closure);
    std::printf("      orthonormality defect       %.3e  (tol 1e-10)\n", ortho);
    return closure < 1e-8 && ortho < 1e-10;
}

// ---------------------------------------------------------------------------
// 14. spin flows stay tangent to the sphere, and the y-independent limits
//     reduce to the printed one-dimensional forms
bool criterion14() {
    double worst_tangency = 0;
    auto record = [&](const char* name, const SpinField& s, const VectorField3& s_t) {
        double t = linf_norm(dot(s.s, s_t));
        std::printf("      tangency %-10s         %.3e\n", name, t);
        worst_tangency = std::max(worst_tangency, t);
    };

    Grid2D g(64, 64, 2 * pi, 2 * pi);
    ModelParams mp;
    {
        SpinField s{unit_field(g, 11, 0.15, 3, /*even_x=*/true), Signature(+1)};
        record("m1", s, rhs_m1(s).s_t);
        record("mxxii", s, rhs_mxxii(s, mp).s_t);
        record("lle2d", s, rhs_lle2d(s).s_t);
    }
    {
        Grid2D gi(64, 64, 2 * pi, 2 * pi * std::sqrt(2.0));
        SpinField s{unit_field(gi, 12, 0.15, 3, /*even_x=*/true), Signature(+1)};
        record("ishimori", s, rhs_ishimori(s, mp).s_t);
    }
    {
        BandLimitedOpts o;
        o.kmax = 3;
        o.amp = 0.5;
        RealField2D th = band_limited(g, 28, o);
        SpinField s{VectorField3(g), Signature(+1)};
        for (std::size_t i = 0; i < th.v.size(); ++i) {
            s.s.c[0].v[i] = std::cos(th.v[i]);
            s.s.c[1].v[i] = std::sin(th.v[i]);
        }
        record("planar", s, rhs_mxvii(s).s_t);
    }

    // y-independent reductions: build S from a line profile theta(x)
    Grid1D gl(64, 2 * pi);
    std::vector<double> th = band_limited_line(gl, 5, 3, 0.6);
    SpinField s1{VectorField3(g), Signature(+1)};
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            s1.s.c[0].at(ix, iy) = std::cos(th[ix]);
            s1.s.c[2].at(ix, iy) = std::sin(th[ix]);
        }
    double red_m1 = 0, red_mxxii = 0, red_lle = 0;
    {
        SpinRhs r = rhs_m1(s1);
        for (const auto& c : r.s_t.c) red_m1 = std::max(red_m1, linf_norm(c));
    }
    {
        SpinRhs r = rhs_mxxii(s1, mp);
        for (const auto& c : r.s_t.c) red_mxxii = std::max(red_mxxii, linf_norm(c));
    }
    {
        SpinRhs r = rhs_lle2d(s1);
        // per-line oracle: S x S_xx built with the 1D derivative
        std::vector<double> c1(gl.n), c3(gl.n);
        for (int i = 0; i < gl.n; ++i) {
            c1[i] = std::cos(th[i]);
            c3[i] = std::sin(th[i]);
        }
        std::vector<double> c1xx = deriv_line(gl, deriv_line(gl, c1));
        std::vector<double> c3xx = deriv_line(gl, deriv_line(gl, c3));
        for (int iy = 0; iy < g.ny; ++iy)
            for (int ix = 0; ix < g.nx; ++ix) {
                // (S x S_xx) for S = (c1, 0, c3): component 2 = c3 c1xx - c1 c3xx
                double oracle = c3[ix] * c1xx[ix] - c1[ix] * c3xx[ix];
                red_lle = std::max(red_lle, std::abs(r.s_t.c[1].at(ix, iy) - oracle));
                red_lle = std::max(red_lle, std::abs(r.s_t.c[0].at(ix, iy)));
                red_lle = std::max(red_lle, std::abs(r.s_t.c[2].at(ix, iy)));
            }
    }
    std::printf("      y-independent m1 flow       %.3e  (tol 1e-9; closed form is 0)\n", red_m1);
    std::printf("      y-independent mxxii flow    %.3e  (tol 1e-9; closed form is 0)\n",
                red_mxxii);
    std::printf("      y-independent lle2d vs 1d   %.3e  (tol 1e-9)\n", red_lle);
    std::printf("      worst tangency              %.3e  (tol 1e-9)\n", worst_tangency);
    return worst_tangency < 1e-9 && red_m1 < 1e-9 && red_mxxii < 1e-9 && red_lle < 1e-9;
}

}  // namespace

int main() {
    std::printf("acceptance gate: geometric soliton toolkit\n");
    std::printf("------------------------------------------\n");
    verdict(1, "spectral derivative/antiderivative floor", criterion01());
    verdict(2, "transverse-coefficient transport solve", criterion02());
    verdict(3, "planar-curve compatibility residual", criterion03());
    verdict(4, "planar frequency derivative matches KP", criterion04());
    verdict(5, "anisotropic frequency derivative matches NV", criterion05());
    verdict(6, "envelope soliton transit: shape and mass", criterion06());
    verdict(7, "KP line soliton: equilibrium, shape, integral", criterion07());
    verdict(8, "real third-order flow: reality, symbol, order", criterion08());
    verdict(9, "curvature pipeline: exact route and isolated gap", criterion09());
    verdict(10, "operator-triple identity closure", criterion10());
    verdict(11, "gauge partnership at matched residual order", criterion11());
    verdict(12, "surface compatibility and tamper detection", criterion12());
    verdict(13, "constant-curvature frame closes the circle", criterion13());
    verdict(14, "spin tangency and one-dimensional limits", criterion14());
    std::printf("------------------------------------------\n");
    std::printf("%d of 14 criteria passed\n", 14 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
