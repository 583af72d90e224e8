#include "solgeo/spin_models.hpp"

#include <cmath>

namespace solgeo {

void check_normalization(const SpinField& s, double tol) {
    double E = s.sig.e_sign;
    RealField2D n = s.s.c[0] * s.s.c[0] + s.s.c[1] * s.s.c[1] +
                    (E > 0 ? 1.0 : -1.0) * (s.s.c[2] * s.s.c[2]);
    double dev = linf_norm(map1(n, [E](double v) { return v - E; }));
    if (dev > tol) throw NonUnit(dev);
}

SpinMatrixField vec_to_matrix(const SpinField& s, double tol) {
    check_normalization(s, tol);
    const Grid2D& g = s.s.grid();
    SpinMatrixField out(g);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            double s1 = s.s.c[0].at(ix, iy), s2 = s.s.c[1].at(ix, iy),
                   s3 = s.s.c[2].at(ix, iy);
            Mat2c& m = out.at(ix, iy);
            m(0, 0) = s3;
            m(0, 1) = cd(s1, -s2);
            m(1, 0) = cd(s1, s2);
            m(1, 1) = -s3;
        }
    return out;
}

VectorField3 matrix_to_vec(const SpinMatrixField& m) {
    VectorField3 out(m.grid);
    for (int iy = 0; iy < m.grid.ny; ++iy)
        for (int ix = 0; ix < m.grid.nx; ++ix) {
            const Mat2c& a = m.at(ix, iy);
            out.c[0].at(ix, iy) = a(1, 0).real();
            out.c[1].at(ix, iy) = a(1, 0).imag();
            out.c[2].at(ix, iy) = a(0, 0).real();
        }
    return out;
}

namespace {
VectorField3 dxv(const VectorField3& v) {
    VectorField3 out;
    for (int c = 0; c < 3; ++c) out.c[c] = deriv_x(v.c[c]);
    return out;
}
VectorField3 dyv(const VectorField3& v) {
    VectorField3 out;
    for (int c = 0; c < 3; ++c) out.c[c] = deriv_y(v.c[c]);
    return out;
}
VectorField3 dxxv(const VectorField3& v) {
    VectorField3 out;
    for (int c = 0; c < 3; ++c) out.c[c] = deriv_xx(v.c[c]);
    return out;
}
VectorField3 dyyv(const VectorField3& v) {
    VectorField3 out;
    for (int c = 0; c < 3; ++c) out.c[c] = deriv_yy(v.c[c]);
    return out;
}
}  // namespace

SpinRhs rhs_m1(const SpinField& s) {
    VectorField3 sx = dxv(s.s), sy = dyv(s.s);
    RealField2D integrand = -1.0 * dot(s.s, cross(sx, sy));
    SpinRhs out;
    out.u = adx(integrand);
    VectorField3 flux = cross(s.s, sy) + out.u * s.s;
    out.s_t = dxv(flux);
    return out;
}

SpinRhs rhs_lle2d(const SpinField& s) {
    SpinRhs out;
    out.s_t = cross(s.s, dxxv(s.s) + dyyv(s.s));
    return out;
}

SpinRhs rhs_ishimori(const SpinField& s, const ModelParams& p) {
    VectorField3 sx = dxv(s.s), sy = dyv(s.s);
    RealField2D rhs_u = p.alpha2 * dot(s.s, cross(sy, sx));
    PoissonResult pr = invert_poisson_like(p.alpha2, -0.25, rhs_u);
    SpinRhs out;
    out.u = pr.u;
    out.aux_diag = pr.null_content;
    VectorField3 mvec = 0.25 * dxxv(s.s) + p.alpha2 * dyyv(s.s);
    RealField2D uy = deriv_y(out.u), ux = deriv_x(out.u);
    out.s_t = -1.0 * cross(s.s, mvec) - (uy * sx) - (ux * sy);
    return out;
}

SpinRhs rhs_mxvii(const SpinField& s) {
    double s3max = linf_norm(s.s.c[2]);
    if (s3max > 1e-10) throw S3NotZero(s3max);
    VectorField3 sx = dxv(s.s), sy = dyv(s.s);
    // constraint: dV/dzbar = (S_z . S_zbar)_z / 2
    ComplexField2D szdot(s.s.grid());
    for (int c = 0; c < 2; ++c)
        szdot = szdot + deriv_z(s.s.c[c]) * deriv_zbar(s.s.c[c]);
    SpinRhs out;
    out.v_aux = invert_dzbar(0.5 * deriv_z(szdot));
    RealField2D P = real_part(out.v_aux), Q = imag_part(out.v_aux);
    RealField2D sx2 = dot(sx, sx), sy2 = dot(sy, sy), sxy = dot(sx, sy);
    RealField2D c1 = (3.0 / 16.0) * (sx2 + sy2) + 3.0 * P;
    RealField2D c2 = 3.0 * Q - 0.75 * sxy;
    VectorField3 sxxx(s.s.grid()), sxyy(s.s.grid());
    for (int c = 0; c < 3; ++c) {
        sxxx.c[c] = deriv_xxx(s.s.c[c]);
        sxyy.c[c] = deriv_x(deriv_yy(s.s.c[c]));
    }
    // closed form keeps S_t exactly tangent; the printed brace expression is
    // evaluated alongside and reported
    RealField2D c3 = 0.25 * dot(s.s, 3.0 * sxyy - 1.0 * sxxx);
    RealField2D c3_printed =
        -1.5 * (deriv_x(2.0 * P - (3.0 / 8.0) * sx2) + 0.5 * deriv_y(sxy));
    out.aux_diag = linf_norm(c3 - c3_printed);
    out.s_t = 0.25 * sxxx - 0.75 * sxyy + c1 * sx + c2 * sy + c3 * s.s;
    return out;
}

SpinRhs rhs_mxxii(const SpinField& s, const ModelParams& p) {
    if (p.b_gauge == 0) throw ZeroGaugeParam();
    double b2 = p.b_gauge * p.b_gauge;
    VectorField3 sx = dxv(s.s), sy = dyv(s.s);
    SpinRhs out;
    out.u = adx(-1.0 * dot(s.s, cross(sx, sy)));
    out.v1 = adx(map1(deriv_y(dot(sx, sx)), [b2](double v) { return v / (4 * b2); }));
    VectorField3 flux = cross(s.s, sy) + out.u * s.s;
    out.s_t = -1.0 * (dxv(flux) + 0.5 * (out.v1 * sx) - 2.0 * b2 * sy);
    return out;
}

RealField2D omega_mx(const RealField2D& k, const ModelParams& p) {
    DxxResult w2 = invert_dxx(deriv_yy(k));
    return 3.0 * (k * k) + deriv_xx(k) + 3.0 * p.alpha2 * w2.w;
}

OmegaMxi omega_mxi(const RealField2D& k, double alpha, double beta, double tol) {
    double scale = std::max(linf_norm(k), 1e-300);
    Antideriv qa = antideriv_x(k);
    if (qa.discarded_linf > tol * scale)
        throw ProjectionLoss(qa.discarded_linf, "omega_mxi q");
    const RealField2D& q = qa.value;
    Antideriv va = antideriv_y(k);  // printed reading v_y = k
    if (va.discarded_linf > tol * scale)
        throw NonSolvableConstraint("omega_mxi: y-mean obstruction in the v constraint",
                                    va.discarded_linf);
    RealField2D w2 = adx(adx(deriv_y(k)));
    OmegaMxi out;
    // gap between the printed v_y = k and the sibling reading v_y = q_x
    out.constraint_gap = linf_norm(va.value - ady(deriv_x(q)));
    out.omega = alpha * deriv_xxx(q) + beta * deriv_yyy(q) -
                3.0 * alpha * deriv_x(va.value * q) - 3.0 * beta * deriv_y(w2 * q);
    return out;
}

const std::vector<ModelInfo>& spin_model_registry() {
    static const std::vector<ModelInfo> reg = {
        {"m1", "spin flow S_t = (S x S_y + u S)_x with nonlocal u",
         R"({"fields":{}})"},
        {"lle2d", "planar Landau-Lifshitz flow S x (S_xx + S_yy)", R"({"fields":{}})"},
        {"ishimori", "topological spin flow with hyperbolic mean-flow potential",
         R"({"fields":{"alpha2":"number"}})"},
        {"mxvii", "third-order two-component spin flow with dzbar-constrained potential",
         R"({"fields":{}})"},
        {"mxxii", "derivative-coupled spin flow with gauge parameter b",
         R"({"fields":{"b_gauge":"nonzero number"}})"},
        {"mx", "curve-frequency form w = 3k^2 + k_xx + 3 a2 w2, w2_xx = k_yy",
         R"({"fields":{"alpha2":"number"}})"},
        {"mxi", "curve-frequency form of the third-order two-direction flow",
         R"({"fields":{"alpha":"number","beta":"number"}})"},
    };
    return reg;
}

}  // namespace solgeo
