#include "solgeo/surface.hpp"

#include <cmath>

#include "solgeo/errors.hpp"

namespace solgeo {

namespace {

VectorField3 vf_deriv_x(const VectorField3& v) {
    VectorField3 out;
    for (int c = 0; c < 3; ++c) out.c[c] = deriv_x(v.c[c]);
    return out;
}
VectorField3 vf_deriv_y(const VectorField3& v) {
    VectorField3 out;
    for (int c = 0; c < 3; ++c) out.c[c] = deriv_y(v.c[c]);
    return out;
}

}  // namespace

SurfacePatch surface_plane(const Grid2D& g) {
    SurfacePatch p;
    p.r = VectorField3(g);
    p.rx = VectorField3(g);
    p.ry = VectorField3(g);
    p.rxx = VectorField3(g);
    p.rxy = VectorField3(g);
    p.ryy = VectorField3(g);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            p.r.c[0].at(ix, iy) = g.x(ix);
            p.r.c[1].at(ix, iy) = g.y(iy);
            p.rx.c[0].at(ix, iy) = 1.0;
            p.ry.c[1].at(ix, iy) = 1.0;
        }
    p.has_analytic = true;
    return p;
}

SurfacePatch surface_torus(const Grid2D& g, double R, double rho) {
    if (!(R > 0) || !(rho > 0) || rho >= R)
        throw Error("torus requires 0 < rho < R");
    SurfacePatch p;
    p.r = VectorField3(g);
    p.rx = VectorField3(g);
    p.ry = VectorField3(g);
    p.rxx = VectorField3(g);
    p.rxy = VectorField3(g);
    p.ryy = VectorField3(g);
    const double au = 2 * pi / g.lx, av = 2 * pi / g.ly;
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            double u = au * g.x(ix), v = av * g.y(iy);
            double cu = std::cos(u), su = std::sin(u);
            double cv = std::cos(v), sv = std::sin(v);
            double w = R + rho * cv;
            p.r.c[0].at(ix, iy) = w * cu;
            p.r.c[1].at(ix, iy) = w * su;
            p.r.c[2].at(ix, iy) = rho * sv;
            // d/dx = au * d/du etc.
            p.rx.c[0].at(ix, iy) = -w * su * au;
            p.rx.c[1].at(ix, iy) = w * cu * au;
            p.ry.c[0].at(ix, iy) = -rho * sv * cu * av;
            p.ry.c[1].at(ix, iy) = -rho * sv * su * av;
            p.ry.c[2].at(ix, iy) = rho * cv * av;
            p.rxx.c[0].at(ix, iy) = -w * cu * au * au;
            p.rxx.c[1].at(ix, iy) = -w * su * au * au;
            p.rxy.c[0].at(ix, iy) = rho * sv * su * au * av;
            p.rxy.c[1].at(ix, iy) = -rho * sv * cu * au * av;
            p.ryy.c[0].at(ix, iy) = -rho * cv * cu * av * av;
            p.ryy.c[1].at(ix, iy) = -rho * cv * su * av * av;
            p.ryy.c[2].at(ix, iy) = -rho * sv * av * av;
        }
    p.has_analytic = true;
    return p;
}

SurfacePatch surface_cylinder(const Grid2D& g, const std::string& profile) {
    if (profile != "circle") throw Error("unknown cylinder profile: " + profile);
    const double R = g.lx / (2 * pi);  // unit-speed closed cross-section
    SurfacePatch p;
    p.r = VectorField3(g);
    p.rx = VectorField3(g);
    p.ry = VectorField3(g);
    p.rxx = VectorField3(g);
    p.rxy = VectorField3(g);
    p.ryy = VectorField3(g);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            double u = g.x(ix) / R;
            double cu = std::cos(u), su = std::sin(u);
            p.r.c[0].at(ix, iy) = R * cu;
            p.r.c[1].at(ix, iy) = R * su;
            p.r.c[2].at(ix, iy) = g.y(iy);
            p.rx.c[0].at(ix, iy) = -su;
            p.rx.c[1].at(ix, iy) = cu;
            p.ry.c[2].at(ix, iy) = 1.0;
            p.rxx.c[0].at(ix, iy) = -cu / R;
            p.rxx.c[1].at(ix, iy) = -su / R;
        }
    p.has_analytic = true;
    return p;
}

SurfacePatch surface_graph(const Grid2D& g, const RealField2D& h) {
    require_same(g, h.grid);
    SurfacePatch p;
    p.r = VectorField3(g);
    p.rx = VectorField3(g);
    p.ry = VectorField3(g);
    p.rxx = VectorField3(g);
    p.rxy = VectorField3(g);
    p.ryy = VectorField3(g);
    RealField2D hx = deriv_x(h), hy = deriv_y(h);
    RealField2D hxx = deriv_xx(h), hxy = deriv_xy(h), hyy = deriv_yy(h);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            p.r.c[0].at(ix, iy) = g.x(ix);
            p.r.c[1].at(ix, iy) = g.y(iy);
            p.rx.c[0].at(ix, iy) = 1.0;
            p.ry.c[1].at(ix, iy) = 1.0;
        }
    p.r.c[2] = h;
    p.rx.c[2] = hx;
    p.ry.c[2] = hy;
    p.rxx.c[2] = hxx;
    p.rxy.c[2] = hxy;
    p.ryy.c[2] = hyy;
    p.has_analytic = true;
    return p;
}

SurfacePatch make_named_surface(const Grid2D& g, const std::string& name) {
    if (name == "plane") return surface_plane(g);
    if (name.rfind("torus:", 0) == 0) {
        std::string args = name.substr(6);
        auto comma = args.find(',');
        if (comma == std::string::npos) throw Error("torus surface needs R,rho");
        double R = std::stod(args.substr(0, comma));
        double rho = std::stod(args.substr(comma + 1));
        return surface_torus(g, R, rho);
    }
    if (name.rfind("cylinder:", 0) == 0) return surface_cylinder(g, name.substr(9));
    if (name == "cylinder") return surface_cylinder(g);
    throw Error("unknown surface: " + name);
}

FundamentalForms fundamental_forms(const SurfacePatch& p) {
    for (int c = 0; c < 3; ++c)
        if (!all_finite(p.r.c[c])) throw Error("surface position contains non-finite samples");

    FundamentalForms ff;
    VectorField3 rxx, rxy, ryy;
    if (p.has_analytic) {
        ff.rx = p.rx;
        ff.ry = p.ry;
        rxx = p.rxx;
        rxy = p.rxy;
        ryy = p.ryy;
    } else {
        ff.rx = vf_deriv_x(p.r);
        ff.ry = vf_deriv_y(p.r);
        rxx = vf_deriv_x(ff.rx);
        rxy = vf_deriv_y(ff.rx);
        ryy = vf_deriv_y(ff.ry);
    }

    VectorField3 cr = cross(ff.rx, ff.ry);
    RealField2D crn = map1(dot(cr, cr), [](double v) { return std::sqrt(std::max(v, 0.0)); });
    double min_norm = crn.v[0];
    for (double v : crn.v) min_norm = std::min(min_norm, v);
    double scale = linf_norm(crn);
    if (!(min_norm > 1e-12 * std::max(scale, 1.0))) throw DegenerateImmersion(min_norm);

    ff.n_vec = VectorField3(p.r.grid());
    for (int c = 0; c < 3; ++c) ff.n_vec.c[c] = map2(cr.c[c], crn, [](double a, double b) { return a / b; });

    ff.e_form = dot(ff.rx, ff.rx);
    ff.f_form = dot(ff.rx, ff.ry);
    ff.g_form = dot(ff.ry, ff.ry);
    ff.l_form = dot(rxx, ff.n_vec);
    ff.m_form = dot(rxy, ff.n_vec);
    ff.n_form = dot(ryy, ff.n_vec);
    return ff;
}

namespace {

struct MetricInverse {
    RealField2D i11, i12, i22;  // symmetric
};

MetricInverse invert_metric(const FundamentalForms& ff) {
    RealField2D det = ff.e_form * ff.g_form - ff.f_form * ff.f_form;
    double min_det = det.v[0];
    for (double v : det.v) min_det = std::min(min_det, v);
    double scale = linf_norm(det);
    if (!(min_det > 1e-12 * std::max(scale, 1.0))) throw SingularMetric(min_det);
    MetricInverse mi;
    mi.i11 = map2(ff.g_form, det, [](double a, double d) { return a / d; });
    mi.i12 = map2(ff.f_form, det, [](double a, double d) { return -a / d; });
    mi.i22 = map2(ff.e_form, det, [](double a, double d) { return a / d; });
    return mi;
}

}  // namespace

ChristoffelField christoffel(const FundamentalForms& ff) {
    MetricInverse mi = invert_metric(ff);
    const RealField2D* gmat[2][2] = {{&ff.e_form, &ff.f_form}, {&ff.f_form, &ff.g_form}};
    const RealField2D* ginv[2][2] = {{&mi.i11, &mi.i12}, {&mi.i12, &mi.i22}};

    RealField2D dg[2][2][2];  // dg[axis][i][j]
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            dg[0][i][j] = deriv_x(*gmat[i][j]);
            dg[1][i][j] = deriv_y(*gmat[i][j]);
        }

    auto gamma = [&](int k, int i, int j) {
        RealField2D acc(ff.e_form.grid);
        for (int l = 0; l < 2; ++l)
            acc = acc + (*ginv[k][l]) * (dg[i][l][j] + dg[j][i][l] - dg[l][i][j]);
        return 0.5 * acc;
    };

    ChristoffelField ch;
    ch.g111 = gamma(0, 0, 0);
    ch.g112 = gamma(0, 0, 1);
    ch.g122 = gamma(0, 1, 1);
    ch.g211 = gamma(1, 0, 0);
    ch.g212 = gamma(1, 0, 1);
    ch.g222 = gamma(1, 1, 1);
    return ch;
}

Weingarten weingarten(const FundamentalForms& ff) {
    MetricInverse mi = invert_metric(ff);
    Weingarten w;
    w.p1 = -(ff.l_form * mi.i11 + ff.m_form * mi.i12);
    w.p2 = -(ff.l_form * mi.i12 + ff.m_form * mi.i22);
    w.q1 = -(ff.m_form * mi.i11 + ff.n_form * mi.i12);
    w.q2 = -(ff.m_form * mi.i12 + ff.n_form * mi.i22);
    return w;
}

GaussWeingartenMatrices gauss_weingarten_matrices(const FundamentalForms& ff,
                                                  const ChristoffelField& ch) {
    Weingarten w = weingarten(ff);
    const Grid2D& g = ff.e_form.grid;
    GaussWeingartenMatrices out{Matrix3Field(g), Matrix3Field(g)};
    out.a.at(0, 0) = ch.g111;
    out.a.at(0, 1) = ch.g211;
    out.a.at(0, 2) = ff.l_form;
    out.a.at(1, 0) = ch.g112;
    out.a.at(1, 1) = ch.g212;
    out.a.at(1, 2) = ff.m_form;
    out.a.at(2, 0) = w.p1;
    out.a.at(2, 1) = w.p2;

    out.b.at(0, 0) = ch.g112;
    out.b.at(0, 1) = ch.g212;
    out.b.at(0, 2) = ff.m_form;
    out.b.at(1, 0) = ch.g122;
    out.b.at(1, 1) = ch.g222;
    out.b.at(1, 2) = ff.n_form;
    out.b.at(2, 0) = w.q1;
    out.b.at(2, 1) = w.q2;
    return out;
}

GaussCodazziResiduals gauss_codazzi_from_forms(const FundamentalForms& ff) {
    const Grid2D& g = ff.e_form.grid;
    ChristoffelField ch = christoffel(ff);
    MetricInverse mi = invert_metric(ff);
    const RealField2D* b[2][2] = {{&ff.l_form, &ff.m_form}, {&ff.m_form, &ff.n_form}};
    const RealField2D* ginv[2][2] = {{&mi.i11, &mi.i12}, {&mi.i12, &mi.i22}};

    // mixed second form b^l_k = b_{ks} g^{sl}
    RealField2D bmix[2][2];
    for (int l = 0; l < 2; ++l)
        for (int k = 0; k < 2; ++k) {
            RealField2D acc(g);
            for (int s = 0; s < 2; ++s) acc = acc + (*b[k][s]) * (*ginv[s][l]);
            bmix[l][k] = acc;
        }

    auto d_axis = [&](int axis, const RealField2D& f) { return axis == 0 ? deriv_x(f) : deriv_y(f); };

    GaussCodazziResiduals out;
    double gauss_scale = 0, codazzi_scale = 0;
    // curvature components are antisymmetric in the last index pair; (j,k) =
    // (1,2) carries all the content
    for (int l = 0; l < 2; ++l)
        for (int i = 0; i < 2; ++i) {
            RealField2D t1 = d_axis(1, ch.at(l, i, 0));
            RealField2D t2 = d_axis(0, ch.at(l, i, 1));
            RealField2D t3(g), t4(g);
            for (int s = 0; s < 2; ++s) {
                t3 = t3 + ch.at(s, i, 0) * ch.at(l, 1, s);
                t4 = t4 + ch.at(s, i, 1) * ch.at(l, 0, s);
            }
            RealField2D target = (*b[i][0]) * bmix[l][1] - (*b[i][1]) * bmix[l][0];
            RealField2D resid = t1 - t2 + t3 - t4 - target;
            out.gauss_l2 = std::max(out.gauss_l2, l2_norm(resid));
            out.gauss_linf = std::max(out.gauss_linf, linf_norm(resid));
            for (const RealField2D* t : {&t1, &t2, &t3, &t4, &target})
                gauss_scale = std::max(gauss_scale, linf_norm(*t));
        }
    out.gauss_rel = out.gauss_linf / std::max(gauss_scale, 1e-300);

    for (int i = 0; i < 2; ++i) {
        RealField2D lhs = d_axis(1, *b[i][0]) - d_axis(0, *b[i][1]);
        RealField2D rhs(g);
        for (int s = 0; s < 2; ++s)
            rhs = rhs + ch.at(s, i, 1) * (*b[s][0]) - ch.at(s, i, 0) * (*b[s][1]);
        RealField2D resid = lhs - rhs;
        out.codazzi_l2 = std::max(out.codazzi_l2, l2_norm(resid));
        out.codazzi_linf = std::max(out.codazzi_linf, linf_norm(resid));
        codazzi_scale = std::max({codazzi_scale, linf_norm(lhs), linf_norm(rhs)});
    }
    out.codazzi_rel = out.codazzi_linf / std::max(codazzi_scale, 1e-300);

    GaussWeingartenMatrices gw = gauss_weingarten_matrices(ff, ch);
    Matrix3Field ay = deriv_y(gw.a), bx = deriv_x(gw.b);
    Matrix3Field comm = commutator(gw.a, gw.b);
    Matrix3Field resid = ay - bx + comm;
    out.matrix_linf = frobenius_max(resid);
    double s2 = 0;
    for (const auto& en : resid.e) {
        double n = l2_norm(en);
        s2 += n * n;
    }
    out.matrix_l2 = std::sqrt(s2);
    double mscale = std::max({frobenius_max(ay), frobenius_max(bx), frobenius_max(comm)});
    out.matrix_rel = out.matrix_linf / std::max(mscale, 1e-300);
    return out;
}

GaussCodazziResiduals gauss_codazzi_residual(const SurfacePatch& p) {
    return gauss_codazzi_from_forms(fundamental_forms(p));
}

TrihedralResult trihedral(const SurfacePatch& p, double tol) {
    FundamentalForms ff = fundamental_forms(p);
    double e_dev = 0, f_dev = 0;
    for (double v : ff.e_form.v) e_dev = std::max(e_dev, std::abs(v - 1.0));
    f_dev = linf_norm(ff.f_form);
    if (e_dev > tol || f_dev > tol) throw GaugeViolation(e_dev, f_dev);

    TrihedralResult out;
    out.frame.e1 = ff.rx;
    out.frame.e2 = ff.n_vec;
    out.frame.e3 = cross(ff.rx, ff.n_vec);
    out.frame.sig = Signature(+1);
    out.k = 0.5 * ff.l_form;
    RealField2D sqg = map1(ff.g_form, [](double v) { return std::sqrt(std::max(v, 0.0)); });
    out.tau = map2(ff.m_form, sqg, [](double a, double b) { return a / b; });
    return out;
}

}  // namespace solgeo
