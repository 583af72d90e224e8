#include "solgeo/solvers.hpp"

#include <cmath>
#include <functional>

#include "solgeo/errors.hpp"

namespace solgeo {

namespace {

template <class F>
ComplexField2D symbol_field(const Grid2D& g, F&& f) {
    ComplexField2D s(g);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) s.at(ix, iy) = f(g.kx(ix), g.ky(iy), ix, iy);
    return s;
}

ComplexField2D exp_field(const ComplexField2D& s, double t) {
    return map1(s, [t](cd z) { return std::exp(t * z); });
}

void check_cfg(const TimeSteppingConfig& cfg) {
    if (!(cfg.dt > 0)) throw Error("time step must be positive");
    if (cfg.n_steps <= 0) throw Error("step count must be positive");
    if (cfg.snapshot_every <= 0) throw Error("snapshot interval must be positive");
}

using NlinFn = std::function<ComplexField2D(const ComplexField2D&)>;

// classical RK4 on the integrating-factor transformed state; qb/qc/qd are the
// stage states mapped back to physical space so the nonlinearity sees them
struct StepperIF {
    double dt;
    ComplexField2D E1h, E1;  // exp(L dt/2), exp(L dt)
    NlinFn nlin;

    ComplexField2D step(const ComplexField2D& q) const {
        ComplexField2D Q = to_spectral(q);
        ComplexField2D A = to_spectral(nlin(q));
        ComplexField2D qb = to_physical(E1h * (Q + (0.5 * dt) * A));
        ComplexField2D B = to_spectral(nlin(qb));
        ComplexField2D qc = to_physical(E1h * Q + (0.5 * dt) * B);
        ComplexField2D C = to_spectral(nlin(qc));
        ComplexField2D qd = to_physical(E1 * Q + dt * (E1h * C));
        ComplexField2D D = to_spectral(nlin(qd));
        return to_physical(E1 * Q + (dt / 6.0) * (E1 * A + 2.0 * (E1h * (B + C)) + D));
    }
};

// scheme selection shared by the integrating-factor solvers: the default keeps
// the linear part exact; "rk4" folds it into the stage evaluations instead
StepperIF make_if_stepper(const Grid2D& g, const ComplexField2D& lsym, NlinFn nlin,
                          const TimeSteppingConfig& cfg, const char* id) {
    StepperIF st;
    st.dt = cfg.dt;
    if (cfg.scheme.empty() || cfg.scheme == "rk4_integrating_factor") {
        st.E1h = exp_field(lsym, cfg.dt / 2);
        st.E1 = exp_field(lsym, cfg.dt);
        st.nlin = std::move(nlin);
    } else if (cfg.scheme == "rk4") {
        st.E1h = ComplexField2D(g, cd(1));
        st.E1 = st.E1h;
        st.nlin = [lsym, base = std::move(nlin)](const ComplexField2D& q) {
            return to_physical(lsym * to_spectral(q)) + base(q);
        };
    } else {
        throw Error(std::string("unknown scheme for ") + id + ": " + cfg.scheme);
    }
    return st;
}

Trajectory run_if(const Grid2D& g, const ComplexField2D& q0, const StepperIF& st,
                  const TimeSteppingConfig& cfg, const char* eq_id,
                  const std::function<void(const ComplexField2D&)>& monitor = {}) {
    check_cfg(cfg);
    Trajectory traj{g, {}, {}, {}, {}};
    const double limit = cfg.blowup_factor * std::max(linf_norm(q0), 1e-12);
    ComplexField2D q = q0;
    auto record = [&](int i) {
        traj.times.push_back(i * cfg.dt);
        traj.states.push_back(q);
        for (const auto& [name, val] : conserved(eq_id, q)) traj.conserved_series[name].push_back(val);
    };
    if (monitor) monitor(q);
    for (int i = 0; i < cfg.n_steps; ++i) {
        if (i % cfg.snapshot_every == 0) record(i);
        q = st.step(q);
        if (!all_finite(q) || linf_norm(q) > limit) throw BlowupDetected(linf_norm(q), i + 1);
        if (monitor) monitor(q);
    }
    record(cfg.n_steps);
    return traj;
}

ComplexField2D maybe_dealias(const ComplexField2D& f, bool on) { return on ? dealias23(f) : f; }

// ---- per-equation nonlinearities ------------------------------------------

ComplexField2D kp_lsym_entry_free(const Grid2D& g, double alpha2) {
    // -i kx^3 plus the x-antiderivative of the transverse term; the kx = 0
    // column has no dispersive content and stays untouched
    return symbol_field(g, [alpha2](double kx, double ky, int ix, int) {
        if (ix == 0) return cd(0);
        return cd(0, -kx * kx * kx + 3 * alpha2 * ky * ky / kx);
    });
}

ComplexField2D kp_nlin(const ComplexField2D& q, bool dealias) {
    return deriv_x(maybe_dealias(3.0 * (q * q), dealias));
}

ComplexField2D nv_nlin(const ComplexField2D& q, double alpha, double beta, bool dealias) {
    ComplexField2D v = ady(deriv_x(q));
    ComplexField2D w = adx(deriv_y(q));
    return (-3.0 * alpha) * deriv_x(maybe_dealias(v * q, dealias)) +
           (-3.0 * beta) * deriv_y(maybe_dealias(w * q, dealias));
}

ComplexField2D mnv_nlin(const ComplexField2D& q, bool dealias) {
    ComplexField2D V = invert_dzbar(deriv_z(q * q));
    ComplexField2D Vb = conj(V);
    ComplexField2D r = 3.0 * (V * deriv_z(q)) + 1.5 * (deriv_z(V) * q) +
                       3.0 * (Vb * deriv_zbar(q)) + 1.5 * (deriv_zbar(Vb) * q);
    return maybe_dealias(r, dealias);
}

ComplexField2D strachan_nlin(const ComplexField2D& q, Signature sig, bool dealias) {
    RealField2D absq2 = real_part(conj(q) * q);
    RealField2D V = double(sig.e_sign) * adx(deriv_y(absq2));
    return maybe_dealias(-deriv_x(V * q), dealias);
}

RealField2D ds_potential(const ComplexField2D& q, Signature sig, double alpha2,
                         double* null_content) {
    RealField2D pq = double(sig.e_sign) * real_part(conj(q) * q);
    RealField2D rhs = -2.0 * (alpha2 * deriv_yy(pq) + 0.25 * deriv_xx(pq));
    PoissonResult pr = invert_poisson_like(alpha2, -0.25, rhs);
    if (null_content) *null_content = std::max(*null_content, pr.null_content);
    return pr.u;
}

}  // namespace

// ---- solvers ---------------------------------------------------------------

Trajectory1D solve_nls(const std::vector<cd>& q0, const Grid1D& g, Signature sig,
                       const TimeSteppingConfig& cfg) {
    check_cfg(cfg);
    if (int(q0.size()) != g.n) throw Error("initial state size does not match the grid");
    bool composed;  // 4th-order triple-jump composition of the symmetric split
    if (cfg.scheme.empty() || cfg.scheme == "split_step")
        composed = true;
    else if (cfg.scheme == "split_step2")
        composed = false;
    else
        throw Error("unknown scheme for nls: " + cfg.scheme);

    const double E = sig.e_sign;
    auto lin_table = [&](double h) {
        std::vector<cd> t(g.n);
        for (int i = 0; i < g.n; ++i) t[i] = std::exp(cd(0, -g.k(i) * g.k(i) * h));
        return t;
    };
    auto nlin_half = [&](std::vector<cd>& q, double h) {
        for (auto& z : q) z *= std::exp(cd(0, 2 * E * std::norm(z) * h));
    };
    auto strang = [&](std::vector<cd>& q, double h, const std::vector<cd>& lin) {
        nlin_half(q, h / 2);
        fft1(g.n, q.data(), -1);
        for (int i = 0; i < g.n; ++i) q[i] *= lin[i];
        fft1(g.n, q.data(), +1);
        nlin_half(q, h / 2);
    };

    const double w1 = 1.0 / (2.0 - std::cbrt(2.0)), w0 = 1.0 - 2.0 * w1;
    std::vector<cd> lin_w1 = lin_table(w1 * cfg.dt), lin_w0 = lin_table(w0 * cfg.dt);
    std::vector<cd> lin_full = lin_table(cfg.dt);

    Trajectory1D traj{g, {}, {}, {}};
    double amp0 = 0;
    for (cd z : q0) amp0 = std::max(amp0, std::abs(z));
    const double limit = cfg.blowup_factor * std::max(amp0, 1e-12);

    std::vector<cd> q = q0;
    auto record = [&](int i) {
        traj.times.push_back(i * cfg.dt);
        traj.states.push_back(q);
        for (const auto& [name, val] : conserved_nls(g, q)) traj.conserved_series[name].push_back(val);
    };
    for (int i = 0; i < cfg.n_steps; ++i) {
        if (i % cfg.snapshot_every == 0) record(i);
        if (composed) {
            strang(q, w1 * cfg.dt, lin_w1);
            strang(q, w0 * cfg.dt, lin_w0);
            strang(q, w1 * cfg.dt, lin_w1);
        } else {
            strang(q, cfg.dt, lin_full);
        }
        double amp = 0;
        bool fin = true;
        for (cd z : q) {
            amp = std::max(amp, std::abs(z));
            fin = fin && std::isfinite(std::abs(z));
        }
        if (!fin || amp > limit) throw BlowupDetected(amp, i + 1);
    }
    record(cfg.n_steps);
    return traj;
}

Trajectory solve_kp(const RealField2D& q0, double alpha2, const TimeSteppingConfig& cfg) {
    const Grid2D& g = q0.grid;
    bool deal = cfg.dealias;
    StepperIF st = make_if_stepper(
        g, kp_lsym_entry_free(g, alpha2),
        [deal](const ComplexField2D& q) { return kp_nlin(q, deal); }, cfg, "kp");
    return run_if(g, complexify(q0), st, cfg, "kp");
}

Trajectory solve_nv(const RealField2D& q0, double alpha, double beta,
                    const TimeSteppingConfig& cfg) {
    const Grid2D& g = q0.grid;
    ComplexField2D lsym = symbol_field(g, [alpha, beta](double kx, double ky, int, int) {
        return cd(0, -(alpha * kx * kx * kx + beta * ky * ky * ky));
    });
    bool deal = cfg.dealias;
    StepperIF st = make_if_stepper(
        g, lsym, [alpha, beta, deal](const ComplexField2D& q) { return nv_nlin(q, alpha, beta, deal); },
        cfg, "nv");
    return run_if(g, complexify(q0), st, cfg, "nv");
}

Trajectory solve_mnv(const RealField2D& q0, const TimeSteppingConfig& cfg) {
    const Grid2D& g = q0.grid;
    // half-derivative pair: sz = (ky + i kx)/2, conjugate partner (-ky + i kx)/2;
    // the cubic symbols sum to i kx (3 ky^2 - kx^2) / 4, purely imaginary
    ComplexField2D lsym = symbol_field(g, [](double kx, double ky, int, int) {
        cd sz = 0.5 * cd(ky, kx), szb = 0.5 * cd(-ky, kx);
        return sz * sz * sz + szb * szb * szb;
    });
    bool deal = cfg.dealias;
    StepperIF st = make_if_stepper(
        g, lsym, [deal](const ComplexField2D& q) { return mnv_nlin(q, deal); }, cfg, "mnv");
    double max_imag = 0;
    Trajectory traj = run_if(g, complexify(q0), st, cfg, "mnv",
                             [&max_imag](const ComplexField2D& q) {
                                 max_imag = std::max(max_imag, linf_norm(imag_part(q)));
                             });
    traj.diagnostics["max_imag"] = max_imag;
    if (max_imag > 1e-6) throw ImaginaryLeak(max_imag);
    return traj;
}

Trajectory solve_ds(const ComplexField2D& q0, Signature sig, double alpha2,
                    const TimeSteppingConfig& cfg) {
    check_cfg(cfg);
    const Grid2D& g = q0.grid;
    bool composed;
    if (cfg.scheme.empty() || cfg.scheme == "split_step")
        composed = true;
    else if (cfg.scheme == "split_step2")
        composed = false;
    else
        throw Error("unknown scheme for ds: " + cfg.scheme);

    auto lin_field = [&](double h) {
        return symbol_field(g, [alpha2, h](double kx, double ky, int, int) {
            return std::exp(cd(0, -(0.25 * kx * kx + alpha2 * ky * ky) * h));
        });
    };
    double max_null = 0;
    // the potential depends on |q|^2 only, which the phase rotation preserves,
    // so each split substep is integrated exactly
    auto nl_half = [&](ComplexField2D& q, double h) {
        RealField2D v = ds_potential(q, sig, alpha2, &max_null);
        q = map2(q, v, [h](cd z, double vv) { return z * std::exp(cd(0, vv * h)); });
    };
    auto strang = [&](ComplexField2D& q, double h, const ComplexField2D& lin) {
        nl_half(q, h / 2);
        q = to_physical(lin * to_spectral(q));
        nl_half(q, h / 2);
    };

    const double w1 = 1.0 / (2.0 - std::cbrt(2.0)), w0 = 1.0 - 2.0 * w1;
    ComplexField2D lin_w1 = lin_field(w1 * cfg.dt), lin_w0 = lin_field(w0 * cfg.dt);
    ComplexField2D lin_full = lin_field(cfg.dt);

    Trajectory traj{g, {}, {}, {}, {}};
    const double limit = cfg.blowup_factor * std::max(linf_norm(q0), 1e-12);
    ComplexField2D q = q0;
    auto record = [&](int i) {
        traj.times.push_back(i * cfg.dt);
        traj.states.push_back(q);
        for (const auto& [name, val] : conserved("ds", q)) traj.conserved_series[name].push_back(val);
    };
    for (int i = 0; i < cfg.n_steps; ++i) {
        if (i % cfg.snapshot_every == 0) record(i);
        if (composed) {
            strang(q, w1 * cfg.dt, lin_w1);
            strang(q, w0 * cfg.dt, lin_w0);
            strang(q, w1 * cfg.dt, lin_w1);
        } else {
            strang(q, cfg.dt, lin_full);
        }
        if (!all_finite(q) || linf_norm(q) > limit) throw BlowupDetected(linf_norm(q), i + 1);
    }
    record(cfg.n_steps);
    traj.diagnostics["max_null_content"] = max_null;
    return traj;
}

Trajectory solve_strachan(const ComplexField2D& q0, Signature sig,
                          const TimeSteppingConfig& cfg) {
    const Grid2D& g = q0.grid;
    ComplexField2D lsym = symbol_field(g, [](double kx, double ky, int, int) {
        return cd(0, -kx * ky);
    });
    bool deal = cfg.dealias;
    StepperIF st = make_if_stepper(
        g, lsym, [sig, deal](const ComplexField2D& q) { return strachan_nlin(q, sig, deal); },
        cfg, "strachan");
    return run_if(g, q0, st, cfg, "strachan");
}

// ---- plain right-hand sides (shared by residuals and identity checks) ------

ComplexField2D rhs_kp(const ComplexField2D& q, double alpha2) {
    return 6.0 * (q * deriv_x(q)) + deriv_xxx(q) + (3.0 * alpha2) * adx(deriv_yy(q));
}

ComplexField2D rhs_nv(const ComplexField2D& q, double alpha, double beta) {
    ComplexField2D v = ady(deriv_x(q));
    ComplexField2D w = adx(deriv_y(q));
    return alpha * deriv_xxx(q) + beta * deriv_yyy(q) - (3.0 * alpha) * deriv_x(v * q) -
           (3.0 * beta) * deriv_y(w * q);
}

ComplexField2D rhs_mnv_field(const ComplexField2D& q) {
    ComplexField2D V = invert_dzbar(deriv_z(q * q));
    ComplexField2D Vb = conj(V);
    return deriv_z3(q) + deriv_zbar3(q) + 3.0 * (V * deriv_z(q)) + 1.5 * (deriv_z(V) * q) +
           3.0 * (Vb * deriv_zbar(q)) + 1.5 * (deriv_zbar(Vb) * q);
}

ComplexField2D rhs_ds(const ComplexField2D& q, Signature sig, double alpha2) {
    RealField2D v = ds_potential(q, sig, alpha2, nullptr);
    return cd(0, 1) * (0.25 * deriv_xx(q) + alpha2 * deriv_yy(q) + v * q);
}

ComplexField2D rhs_strachan(const ComplexField2D& q, Signature sig) {
    RealField2D absq2 = real_part(conj(q) * q);
    RealField2D V = double(sig.e_sign) * adx(deriv_y(absq2));
    return cd(0, 1) * deriv_xy(q) - deriv_x(V * q);
}

namespace {

// i q_t + q_xy + (i/2)[(V1 q)_x - V2 q - q p q_y] = 0 with p the signed
// conjugate, V1_x = (p q)_y, V2_x = p_xy q - p q_xy
ComplexField2D mxxii_q_residual_field(const ComplexField2D& q, const ComplexField2D& qt,
                                      Signature sig) {
    ComplexField2D p = double(sig.e_sign) * conj(q);
    RealField2D v1 = adx(real_part(deriv_y(p * q)));
    ComplexField2D v2 = adx(deriv_xy(p) * q - p * deriv_xy(q));
    const cd I(0, 1);
    return I * qt + deriv_xy(q) +
           (0.5 * I) * (deriv_x(v1 * q) - v2 * q - q * (p * deriv_y(q)));
}

}  // namespace

std::vector<ResidualSample> residual(const std::string& eq_id, const Trajectory& traj,
                                     const EqParams& p) {
    const int n = int(traj.states.size());
    if (n < 3) throw InsufficientSnapshots(n);

    std::function<ComplexField2D(const ComplexField2D&, const ComplexField2D&)> resid_field;
    if (eq_id == "kp")
        resid_field = [&](const ComplexField2D& q, const ComplexField2D& qt) {
            return qt - rhs_kp(q, p.alpha2);
        };
    else if (eq_id == "nv")
        resid_field = [&](const ComplexField2D& q, const ComplexField2D& qt) {
            return qt - rhs_nv(q, p.alpha, p.beta);
        };
    else if (eq_id == "mnv")
        resid_field = [&](const ComplexField2D& q, const ComplexField2D& qt) {
            return qt - rhs_mnv_field(q);
        };
    else if (eq_id == "ds")
        resid_field = [&](const ComplexField2D& q, const ComplexField2D& qt) {
            return qt - rhs_ds(q, p.sig, p.alpha2);
        };
    else if (eq_id == "strachan")
        resid_field = [&](const ComplexField2D& q, const ComplexField2D& qt) {
            return qt - rhs_strachan(q, p.sig);
        };
    else if (eq_id == "mxxii_q")
        resid_field = [&](const ComplexField2D& q, const ComplexField2D& qt) {
            return mxxii_q_residual_field(q, qt, p.sig);
        };
    else
        throw Error("unknown equation id: " + eq_id);

    const bool fourth = n >= 5;
    const int halo = fourth ? 2 : 1;
    auto spacing_ok = [&](int i) {
        double h = traj.times[i] - traj.times[i - 1];
        for (int j = i - halo; j < i + halo; ++j)
            if (std::abs(traj.times[j + 1] - traj.times[j] - h) > 1e-9 * h) return false;
        return true;
    };

    std::vector<ResidualSample> out;
    for (int i = halo; i < n - halo; ++i) {
        if (!spacing_ok(i)) continue;
        double h = traj.times[i] - traj.times[i - 1];
        ComplexField2D qt =
            fourth ? (1.0 / (12 * h)) * (-1.0 * traj.states[i + 2] + 8.0 * traj.states[i + 1] -
                                         8.0 * traj.states[i - 1] + 1.0 * traj.states[i - 2])
                   : (1.0 / (2 * h)) * (traj.states[i + 1] - traj.states[i - 1]);
        ComplexField2D r = resid_field(traj.states[i], qt);
        out.push_back({traj.times[i], l2_norm(r), linf_norm(r)});
    }
    if (out.empty()) throw Error("no uniformly spaced snapshot window for the residual stencil");
    return out;
}

std::vector<ResidualSample> residual_nls(const Trajectory1D& traj, Signature sig) {
    const int n = int(traj.states.size());
    if (n < 3) throw InsufficientSnapshots(n);
    const Grid1D& g = traj.grid;
    const double E = sig.e_sign;

    auto rhs = [&](const std::vector<cd>& q) {
        std::vector<cd> qxx = q;
        fft1(g.n, qxx.data(), -1);
        for (int i = 0; i < g.n; ++i) qxx[i] *= -g.k(i) * g.k(i);
        fft1(g.n, qxx.data(), +1);
        std::vector<cd> f(g.n);
        for (int i = 0; i < g.n; ++i) f[i] = cd(0, 1) * (qxx[i] + 2 * E * std::norm(q[i]) * q[i]);
        return f;
    };

    const bool fourth = n >= 5;
    const int halo = fourth ? 2 : 1;
    std::vector<ResidualSample> out;
    for (int i = halo; i < n - halo; ++i) {
        double h = traj.times[i] - traj.times[i - 1];
        bool ok = true;
        for (int j = i - halo; j < i + halo; ++j)
            ok = ok && std::abs(traj.times[j + 1] - traj.times[j] - h) <= 1e-9 * h;
        if (!ok) continue;
        std::vector<cd> f = rhs(traj.states[i]);
        double l2 = 0, li = 0;
        for (int m = 0; m < g.n; ++m) {
            cd qt = fourth ? (-traj.states[i + 2][m] + 8.0 * traj.states[i + 1][m] -
                              8.0 * traj.states[i - 1][m] + traj.states[i - 2][m]) /
                                 (12 * h)
                           : (traj.states[i + 1][m] - traj.states[i - 1][m]) / (2 * h);
            double a = std::abs(qt - f[m]);
            l2 += a * a;
            li = std::max(li, a);
        }
        out.push_back({traj.times[i], std::sqrt(l2 / g.n), li});
    }
    if (out.empty()) throw Error("no uniformly spaced snapshot window for the residual stencil");
    return out;
}

LabTripleResult nv_lab_triple_residual(const RealField2D& q, const ComplexField2D& V,
                                       const ComplexField2D& f) {
    require_same(q.grid, V.grid);
    require_same(q.grid, f.grid);
    ComplexField2D qc = complexify(q);
    ComplexField2D Vb = conj(V);

    auto A0 = [](const ComplexField2D& u) { return deriv_z3(u) + deriv_zbar3(u); };
    auto Vpart = [&](const ComplexField2D& u) { return V * deriv_z(u) + Vb * deriv_zbar(u); };
    auto L0 = [](const ComplexField2D& u) { return deriv_z(deriv_zbar(u)); };

    // time-derivative of the potential-carrying operator acting on f
    ComplexField2D qt = A0(qc) + deriv_z(V * qc) + deriv_zbar(Vb * qc);
    ComplexField2D t1 = qt * f;
    // commutator, expanded so the constant-coefficient parts cancel
    // identically and every surviving term carries a factor of q or V
    ComplexField2D t2 = L0(Vpart(f)) - Vpart(L0(f));
    ComplexField2D t3 = qc * A0(f) - A0(qc * f);
    ComplexField2D t4 = qc * Vpart(f) - Vpart(qc * f);
    ComplexField2D bsym = deriv_z(V) + deriv_zbar(Vb);
    ComplexField2D lf = L0(f) + qc * f;
    ComplexField2D t5 = bsym * lf;
    ComplexField2D resid = t1 + t2 + t3 + t4 - t5;

    ComplexField2D af = A0(f) + Vpart(f);
    ComplexField2D laf = L0(af) + qc * af;
    ComplexField2D alf = A0(lf) + Vpart(lf);
    double scale = std::max({l2_norm(laf), l2_norm(alf), l2_norm(t1), l2_norm(t5)});
    double rel = scale > 0 ? l2_norm(resid) / scale : 0.0;
    return {rel, scale};
}

std::map<std::string, double> conserved(const std::string& eq_id, const ComplexField2D& q) {
    (void)eq_id;  // the same functionals are meaningful for every 2D equation here
    std::map<std::string, double> out;
    RealField2D re = real_part(q);
    out["mass"] = integral(real_part(conj(q) * q));
    out["momentum_x"] = integral(imag_part(conj(q) * deriv_x(q)));
    out["int_q"] = integral(re);
    out["int_q2"] = integral(re * re);
    return out;
}

std::map<std::string, double> conserved_nls(const Grid1D& g, const std::vector<cd>& state) {
    std::map<std::string, double> out;
    double mass = 0;
    cd intq = 0;
    for (cd z : state) {
        mass += std::norm(z);
        intq += z;
    }
    std::vector<cd> qx = state;
    fft1(g.n, qx.data(), -1);
    for (int i = 0; i < g.n; ++i) qx[i] *= (i == g.n / 2) ? cd(0) : cd(0, g.k(i));
    fft1(g.n, qx.data(), +1);
    double mom = 0;
    for (int i = 0; i < g.n; ++i) mom += (std::conj(state[i]) * qx[i]).imag();
    out["mass"] = mass / g.n * g.l;
    out["momentum_x"] = mom / g.n * g.l;
    out["int_q"] = intq.real() / double(g.n) * g.l;
    return out;
}

const std::vector<EquationDescriptor>& equation_registry() {
    static const std::vector<EquationDescriptor> reg = {
        {"nls", "complex",
         "cubic Schrodinger line: i q_t + q_xx + 2 E |q|^2 q = 0",
         R"({"sig":"+1 or -1","scheme":"split_step (4th order) | split_step2"})", false},
        {"kp", "real",
         "Kadomtsev-Petviashvili: q_t = 6 q q_x + q_xxx + 3 a2 dx^-1 q_yy",
         R"({"alpha2":"number","scheme":"rk4_integrating_factor | rk4"})", false},
        {"nv", "real",
         "Nizhnik-Veselov-Novikov: q_t = al q_xxx + be q_yyy - 3 al (v q)_x - 3 be (w q)_y",
         R"({"alpha":"number","beta":"number","scheme":"rk4_integrating_factor | rk4"})", false},
        {"mnv", "real",
         "modified Nizhnik-Veselov-Novikov in z/zbar form with potential dV/dzbar = (q^2)_z",
         R"({"scheme":"rk4_integrating_factor | rk4"})", false},
        {"ds", "complex",
         "Davey-Stewartson pair: i q_t + q_xx/4 + a2 q_yy + v q = 0 with an elliptic/hyperbolic potential",
         R"({"sig":"+1 or -1","alpha2":"number","scheme":"split_step | split_step2"})", false},
        {"strachan", "complex",
         "Strachan mixed-derivative Schrodinger: i q_t + q_xy + i (V q)_x = 0, V_x = E (|q|^2)_y",
         R"({"sig":"+1 or -1","scheme":"rk4_integrating_factor | rk4"})", false},
        {"mxxii_q", "complex",
         "gauge partner of the Strachan flow; residual evaluation only",
         R"({"sig":"+1 or -1"})", true},
    };
    return reg;
}

}  // namespace solgeo
