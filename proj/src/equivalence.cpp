#include "solgeo/equivalence.hpp"

#include <cmath>

#include "solgeo/errors.hpp"
#include "solgeo/spin_models.hpp"

namespace solgeo {

Lakshmanan1DResult lakshmanan_map_1d(const Grid1D& g, const std::vector<double>& k,
                                     const std::vector<double>& tau, double tol) {
    if (int(k.size()) != g.n || int(tau.size()) != g.n) throw GridMismatch();
    double scale = 0;
    for (double t : tau) scale = std::max(scale, std::abs(t));
    AntiderivLine ph = antideriv_line(g, tau);
    if (std::abs(ph.discarded_mean) > tol * std::max(1.0, scale))
        throw ProjectionLoss(std::abs(ph.discarded_mean),
                             "torsion mean: the phase does not close on the circle");
    Lakshmanan1DResult out;
    out.discarded_phase_mean = std::abs(ph.discarded_mean);
    out.q.resize(g.n);
    for (int i = 0; i < g.n; ++i) out.q[i] = 0.5 * k[i] * std::exp(cd(0, -ph.value[i]));
    return out;
}

MnvMapResult mnv_map(const RealField2D& k, double tol) {
    Curve2dM cm = curve2d_m(k, tol);
    RealField2D q2 = 0.25 * (k * k) + cm.m * cm.m;
    MnvMapResult out;
    out.q = map1(q2, [](double v) { return std::sqrt(std::max(v, 0.0)); });
    out.m = std::move(cm.m);
    out.m_discarded = cm.discarded;
    return out;
}

MxxiiMapResult mxxii_map(const RealField2D& k, const RealField2D& tau, double b,
                         bool strict) {
    require_same(k.grid, tau.grid);
    if (b == 0) throw ZeroGaugeParam();
    const Grid2D& g = k.grid;

    RealField2D integrand = (1.0 / (b * b)) * (k * k) - 4.0 * tau;
    Antideriv ph = antideriv_x(integrand);

    MxxiiMapResult out;
    out.linear_coeff = -2.0 * b * b;
    double total = out.linear_coeff * g.lx;  // phase advance across one period
    double nwind = std::round(total / (2 * pi));
    bool periodic = std::abs(total - 2 * pi * nwind) <= 1e-9 * (1.0 + std::abs(total));
    if (!periodic && strict) throw NonPeriodicPhase(out.linear_coeff);
    out.linear_phase_included = periodic;
    out.phase_mean_linf = ph.discarded_linf / 8.0;

    out.q = ComplexField2D(g);
    const double amp = 1.0 / (2.0 * b);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            double phase = ph.value.at(ix, iy) / 8.0;
            if (periodic) phase += out.linear_coeff * g.x(ix);
            out.q.at(ix, iy) = amp * k.at(ix, iy) * std::exp(cd(0, phase));
        }
    return out;
}

namespace {
GaugeResult gauge_apply(const ComplexField2D& q, double sign) {
    RealField2D a2 = real_part(conj(q) * q);
    Antideriv th = antideriv_x(a2);
    GaugeResult out;
    out.phase_mean_linf = 0.5 * th.discarded_linf;
    out.q = map2(q, th.value, [sign](cd z, double t) { return z * std::exp(cd(0, sign * 0.5 * t)); });
    return out;
}
}  // namespace

GaugeResult gauge_to_strachan(const ComplexField2D& q) { return gauge_apply(q, -1.0); }
GaugeResult gauge_from_strachan(const ComplexField2D& qp) { return gauge_apply(qp, +1.0); }

CheckResult check_mx_kp(const RealField2D& k, double alpha2) {
    ModelParams p;
    p.alpha2 = alpha2;
    RealField2D lhs = deriv_x(omega_mx(k, p));
    RealField2D resid = lhs - real_part(rhs_kp(complexify(k), alpha2));
    CheckResult out{l2_norm(resid), linf_norm(resid), {}};
    out.diagnostics["term_scale"] = linf_norm(lhs);
    return out;
}

CheckResult check_mxi_nv(const RealField2D& k, double alpha, double beta) {
    OmegaMxi om = omega_mxi(k, alpha, beta);
    RealField2D q = adx(k);
    RealField2D nvr = real_part(rhs_nv(complexify(q), alpha, beta));
    RealField2D resid = deriv_x(om.omega) - deriv_x(nvr);
    CheckResult out{l2_norm(resid), linf_norm(resid), {}};
    out.diagnostics["term_scale"] = linf_norm(deriv_x(om.omega));
    out.diagnostics["constraint_gap"] = om.constraint_gap;
    return out;
}

MnvFrameReport check_mnv_frame(const RealField2D& k, double eps) {
    const Grid2D& g = k.grid;
    MnvFrameReport rep;

    Curve2dM cm = curve2d_m(k);
    const RealField2D& m = cm.m;
    RealField2D q2 = 0.25 * (k * k) + m * m;
    ComplexField2D V = invert_dzbar(deriv_z(q2));
    ComplexField2D Vb = conj(V);
    RealField2D P = real_part(V);

    ComplexField2D psi = map2(k, m, [](double kk, double mm) { return cd(0.5 * kk, mm); });
    ComplexField2D rhs = deriv_z3(psi) + deriv_zbar3(psi) + 3.0 * (V * deriv_z(psi)) +
                         3.0 * (Vb * deriv_zbar(psi)) + 1.5 * (deriv_z(V) * psi) +
                         1.5 * (deriv_zbar(Vb) * psi);
    RealField2D two_re = 2.0 * real_part(rhs);
    RealField2D im_rhs = imag_part(rhs);

    RealField2D om_printed = omega_2d(k, m, V);
    RealField2D om_derived = omega_2d_consistent(k, m, V);

    // the transverse channel determines the frequency only up to a function of
    // y; complete it from the x-line means so d/dy sees the full content
    std::vector<double> gbar = xmean(im_rhs);
    Grid1D gy(g.ny, g.ly);
    AntiderivLine hline = antideriv_line(gy, gbar);
    RealField2D om_full = om_derived;
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) om_full.at(ix, iy) += hline.value[iy];

    // scalar-modulus reading with the printed chain rule, on the support q > eps
    RealField2D ktp = deriv_x(om_printed), mtp = deriv_y(om_printed);
    RealField2D q = map1(q2, [](double v) { return std::sqrt(std::max(v, 0.0)); });
    ComplexField2D qc = complexify(q);
    RealField2D rhs_mod =
        2.0 * real_part(deriv_z3(qc) + 3.0 * (V * deriv_z(qc)) + 1.5 * (deriv_z(V) * qc));
    double num = 0, den = 0;
    std::size_t cnt = 0;
    for (std::size_t i = 0; i < q.v.size(); ++i) {
        if (q.v[i] <= eps) continue;
        double qt = (0.25 * k.v[i] * ktp.v[i] + m.v[i] * mtp.v[i]) / q.v[i];
        double d = qt - rhs_mod.v[i];
        num += d * d;
        den += qt * qt;
        ++cnt;
    }
    rep.support_fraction = double(cnt) / double(g.size());
    if (rep.support_fraction < 0.5) throw DegenerateSupport(rep.support_fraction);
    rep.modulus_rel = std::sqrt(num) / std::max(std::sqrt(den), 1e-300);

    // two-component readings against both frequency assemblies
    auto complex_rel = [&](const RealField2D& om) {
        RealField2D kt = deriv_x(om), mt = deriv_y(om);
        ComplexField2D pt = map2(kt, mt, [](double a, double b) { return cd(0.5 * a, b); });
        return l2_norm(pt - rhs) / std::max(l2_norm(pt), 1e-300);
    };
    rep.complex_printed_rel = complex_rel(om_printed);
    rep.complex_derived_rel = complex_rel(om_full);

    // k-channel: d/dx of the frequency against the mean-free part of 2 Re rhs
    RealField2D target = zero_xmean(two_re);
    auto kchan = [&](const RealField2D& om) {
        return l2_norm(deriv_x(om) - target) / std::max(l2_norm(target), 1e-300);
    };
    rep.k_channel_printed_rel = kchan(om_printed);
    rep.k_channel_derived_rel = kchan(om_derived);

    // the two assemblies differ by a purely local cubic/coupling group (mod
    // x-line means); verify the closed form of that difference
    RealField2D d = om_printed - om_derived;
    d = d - xmean_field(d);
    rep.printed_minus_consistent_linf = linf_norm(d);
    RealField2D nl = -1.5 * (k * deriv_y(k) * m) + 6.0 * (m * m * deriv_y(m)) +
                     3.0 * (deriv_y(P) * m);
    RealField2D closed = (3.0 / 16.0) * (k * k * k) - (5.0 / 16.0) * (k * (m * m)) - adx(nl);
    RealField2D gap = om_printed - om_derived - closed;
    gap = gap - xmean_field(gap);
    rep.decomposition_gap = linf_norm(gap);

    // does the flow preserve the slaving m_x = k_y?  measured directly
    RealField2D wdef = deriv_x(im_rhs) - deriv_y(two_re);
    double wscale = linf_norm(deriv_x(im_rhs));
    rep.slaving_defect_ratio = wscale > 0 ? linf_norm(wdef) / wscale : 0.0;

    rep.diagnostics["m_discarded"] = cm.discarded;
    rep.diagnostics["transverse_mean_mode"] = std::abs(hline.discarded_mean);
    rep.diagnostics["omega_scale"] = linf_norm(om_derived);
    return rep;
}

StrachanGaugeReport check_strachan_gauge(const Trajectory& traj, Signature sig) {
    StrachanGaugeReport rep;
    EqParams ps;
    ps.sig = sig;
    rep.self_series = residual("strachan", traj, ps);

    Trajectory mapped{traj.grid, traj.times, {}, {}, {}};
    mapped.states.reserve(traj.states.size());
    for (const auto& s : traj.states) {
        GaugeResult gr = gauge_from_strachan(s);
        rep.phase_mean_linf = std::max(rep.phase_mean_linf, gr.phase_mean_linf);
        mapped.states.push_back(std::move(gr.q));
    }
    rep.mapped_series = residual("mxxii_q", mapped, ps);

    std::size_t nsamp = std::min(rep.self_series.size(), rep.mapped_series.size());
    for (std::size_t i = 0; i < nsamp; ++i)
        rep.max_ratio = std::max(rep.max_ratio, rep.mapped_series[i].linf /
                                                    std::max(rep.self_series[i].linf, 1e-300));
    return rep;
}

}  // namespace solgeo
