#include "solgeo/frames.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>

namespace solgeo {

Matrix3Field build_C(const CurvatureData3& cd) {
    require_same(cd.k.grid, cd.tau.grid);
    double E = cd.sig.e_sign;
    Matrix3Field C(cd.k.grid);
    C.at(0, 1) = cd.k;
    C.at(1, 0) = -E * cd.k;
    C.at(1, 2) = cd.tau;
    C.at(2, 1) = -1.0 * cd.tau;
    return C;
}

Matrix3Field build_D(const DCoefficients& dc, Signature sig) {
    require_same(dc.m1.grid, dc.m2.grid);
    require_same(dc.m1.grid, dc.m3.grid);
    double E = sig.e_sign;
    Matrix3Field D(dc.m1.grid);
    D.at(0, 1) = dc.m3;
    D.at(0, 2) = -1.0 * dc.m2;
    D.at(1, 0) = -E * dc.m3;
    D.at(1, 2) = dc.m1;
    D.at(2, 0) = E * dc.m2;
    D.at(2, 1) = -1.0 * dc.m1;
    return D;
}

Matrix3Field build_G(const GCoefficients& gc, Signature sig) {
    double E = sig.e_sign;
    Matrix3Field G(gc.w1.grid);
    G.at(0, 1) = gc.w3;
    G.at(0, 2) = -1.0 * gc.w2;
    G.at(1, 0) = -E * gc.w3;
    G.at(1, 2) = gc.w1;
    G.at(2, 0) = E * gc.w2;
    G.at(2, 1) = -1.0 * gc.w1;
    return G;
}

namespace {
Matrix3Field dmat(const Matrix3Field& m, Axis a) {
    return a == Axis::X ? deriv_x(m) : deriv_y(m);
}
}  // namespace

Matrix3Field zero_curvature_residual(const Matrix3Field& A, const Matrix3Field& B, Axis d1,
                                     Axis d2) {
    require_same(A.grid(), B.grid());
    return dmat(A, d2) - dmat(B, d1) + commutator(A, B);
}

// ---- transport line solver ------------------------------------------------

namespace {

using Eigen::Matrix3d;
using Eigen::Vector3d;

Matrix3d hat(const Vector3d& w) {
    Matrix3d K;
    K << 0, -w(2), w(1), w(2), 0, -w(0), -w(1), w(0), 0;
    return K;
}

// exact flow over one unit of d' = hat(w) d + u for constant w, u:
// R = exp(hat(w)), p = (int_0^1 exp(s hat(w)) ds) u
void affine_exp(const Vector3d& w, const Vector3d& u, Matrix3d& R, Vector3d& p) {
    double th = w.norm();
    Matrix3d K = hat(w), K2 = K * K;
    Matrix3d I = Matrix3d::Identity();
    Matrix3d T;
    if (th < 1e-12) {
        R = I + K + 0.5 * K2;
        T = I + 0.5 * K + K2 / 6.0;
    } else {
        double s = std::sin(th), c = std::cos(th);
        R = I + (s / th) * K + ((1 - c) / (th * th)) * K2;
        T = I + ((1 - c) / (th * th)) * K + ((th - s) / (th * th * th)) * K2;
    }
    p = T * u;
}

// values of the trig interpolant of `line` on the n-point grid offset by
// `shift` (coefficients folded numpy-style, Nyquist at -n/2)
std::vector<double> trig_resample(const std::vector<cd>& coeff, int nx, double lx, int nfine,
                                  double shift) {
    std::vector<cd> pad(nfine, cd(0));
    for (int j = 0; j < nx; ++j) {
        int jf = Grid2D::fold(j, nx);
        if (jf == nx / 2) jf = -nx / 2;
        double k = 2 * pi * jf / lx;
        pad[((jf % nfine) + nfine) % nfine] = coeff[j] * std::exp(cd(0, k * shift));
    }
    fft1(nfine, pad.data(), +1);
    std::vector<double> out(nfine);
    for (int i = 0; i < nfine; ++i) out[i] = pad[i].real() * nfine;
    return out;
}

std::vector<cd> line_coeffs(const RealField2D& f, int iy) {
    int nx = f.grid.nx;
    std::vector<cd> c(nx);
    for (int ix = 0; ix < nx; ++ix) c[ix] = f.at(ix, iy);
    fft1(nx, c.data(), -1);
    for (cd& v : c) v /= double(nx);
    return c;
}

struct LineSolveOut {
    std::vector<Vector3d> d;  // at grid points
    double obstruction;
    double min_sv;
};

LineSolveOut transport_line(const std::vector<cd>& kc, const std::vector<cd>& tc,
                            const std::vector<cd>& kyc, const std::vector<cd>& tyc, int nx,
                            double lx, int sub, double strunc) {
    const double AL = 0.25 + std::sqrt(3.0) / 6.0, BE = 0.25 - std::sqrt(3.0) / 6.0;
    const double G1 = 0.5 - std::sqrt(3.0) / 6.0, G2 = 0.5 + std::sqrt(3.0) / 6.0;
    int n = nx * sub;
    double h = lx / n;
    auto k1 = trig_resample(kc, nx, lx, n, G1 * h), k2 = trig_resample(kc, nx, lx, n, G2 * h);
    auto t1 = trig_resample(tc, nx, lx, n, G1 * h), t2 = trig_resample(tc, nx, lx, n, G2 * h);
    auto ky1 = trig_resample(kyc, nx, lx, n, G1 * h),
         ky2 = trig_resample(kyc, nx, lx, n, G2 * h);
    auto ty1 = trig_resample(tyc, nx, lx, n, G1 * h),
         ty2 = trig_resample(tyc, nx, lx, n, G2 * h);

    Matrix3d R = Matrix3d::Identity();
    Vector3d p = Vector3d::Zero();
    std::vector<Matrix3d> Rs(nx);
    std::vector<Vector3d> ps(nx);
    Matrix3d Ra, Rb;
    Vector3d pa, pb;
    for (int j = 0; j < n; ++j) {
        if (j % sub == 0) {
            Rs[j / sub] = R;
            ps[j / sub] = p;
        }
        Vector3d w1(-t1[j], 0, -k1[j]), w2(-t2[j], 0, -k2[j]);
        Vector3d u1(-ty1[j], 0, -ky1[j]), u2(-ty2[j], 0, -ky2[j]);
        affine_exp(h * (AL * w1 + BE * w2), h * (AL * u1 + BE * u2), Ra, pa);
        affine_exp(h * (BE * w1 + AL * w2), h * (BE * u1 + AL * u2), Rb, pb);
        R = Rb * (Ra * R);
        p = Rb * (Ra * p + pa) + pb;
    }
    // periodic closure: (I - monodromy) d0 = p, solving on the non-degenerate
    // subspace; rotation axes contribute near-zero singular values
    Matrix3d A = Matrix3d::Identity() - R;
    Eigen::JacobiSVD<Matrix3d> svd(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Vector3d S = svd.singularValues();
    Vector3d rhs = svd.matrixU().transpose() * p;
    Vector3d z;
    for (int i = 0; i < 3; ++i) z(i) = S(i) > strunc ? rhs(i) / S(i) : 0.0;
    Vector3d d0 = svd.matrixV() * z;
    LineSolveOut out;
    out.obstruction = (A * d0 - p).norm();
    out.min_sv = S(2);
    out.d.resize(nx);
    for (int j = 0; j < nx; ++j) out.d[j] = Rs[j] * d0 + ps[j];
    return out;
}

MSolveReport solve_transport(const CurvatureData3& cd, int sub) {
    const Grid2D& g = cd.k.grid;
    RealField2D ky = deriv_y(cd.k), tauy = deriv_y(cd.tau);
    MSolveReport rep;
    rep.m = DCoefficients{RealField2D(g), RealField2D(g), RealField2D(g)};
    rep.iterations = 1;
    rep.min_closure_gap = 1e300;
    for (int iy = 0; iy < g.ny; ++iy) {
        auto out = transport_line(line_coeffs(cd.k, iy), line_coeffs(cd.tau, iy),
                                  line_coeffs(ky, iy), line_coeffs(tauy, iy), g.nx, g.lx, sub,
                                  1e-2);
        rep.obstruction = std::max(rep.obstruction, out.obstruction);
        rep.min_closure_gap = std::min(rep.min_closure_gap, out.min_sv);
        for (int ix = 0; ix < g.nx; ++ix) {
            rep.m.m1.at(ix, iy) = -out.d[ix](0);
            rep.m.m2.at(ix, iy) = -out.d[ix](1);
            rep.m.m3.at(ix, iy) = -out.d[ix](2);
        }
    }
    return rep;
}

MSolveReport solve_picard(const CurvatureData3& cd, double tol, int max_iter) {
    const Grid2D& g = cd.k.grid;
    double E = cd.sig.e_sign;
    RealField2D ky = deriv_y(cd.k), tauy = deriv_y(cd.tau);
    auto kb = xmean(cd.k), tb = xmean(cd.tau);
    RealField2D m1(g), m2(g), m3(g);
    MSolveReport rep;
    double delta = 0;
    int it = 0;
    for (it = 0; it < max_iter; ++it) {
        RealField2D i1 = tauy + E * (cd.k * m2);
        RealField2D i2 = cd.tau * m3 - cd.k * m1;
        RealField2D i3 = ky - cd.tau * m2;
        RealField2D m1h = adx(i1), m2h = adx(i2), m3h = adx(i3);
        // per-line x-mean completion: the zero-mean antiderivative cannot carry
        // the mean part of the true coefficients, so solve the 3x3 mean system
        auto b1 = xmean(tauy + E * (cd.k * m2h));
        auto b2 = xmean(cd.tau * m3h - cd.k * m1h);
        auto b3 = xmean(ky - cd.tau * m2h);
        delta = 0;
        for (int iy = 0; iy < g.ny; ++iy) {
            double den = kb[iy] * kb[iy] + tb[iy] * tb[iy];
            double a1 = 0, a2 = 0, a3 = 0;
            if (den > 1e-14) {
                a2 = (E * kb[iy] * (-b1[iy]) - tb[iy] * (-b3[iy])) / den;
                a1 = -kb[iy] * (-b2[iy]) / den;
                a3 = tb[iy] * (-b2[iy]) / den;
            }
            for (int ix = 0; ix < g.nx; ++ix) {
                double n1 = m1h.at(ix, iy) + a1, n2 = m2h.at(ix, iy) + a2,
                       n3 = m3h.at(ix, iy) + a3;
                delta = std::max({delta, std::abs(n1 - m1.at(ix, iy)),
                                  std::abs(n2 - m2.at(ix, iy)), std::abs(n3 - m3.at(ix, iy))});
                m1.at(ix, iy) = n1;
                m2.at(ix, iy) = n2;
                m3.at(ix, iy) = n3;
            }
        }
        if (delta < tol) break;
    }
    rep.iterations = it + 1;
    rep.last_delta = delta;
    rep.m = DCoefficients{m1, m2, m3};
    if (delta >= tol) throw NoConvergence(rep.iterations, delta);
    return rep;
}

}  // namespace

MSolveReport solve_m_coefficients(const CurvatureData3& cd, double tol, int max_iter,
                                  MSolveMethod method, int substeps) {
    require_same(cd.k.grid, cd.tau.grid);
    MSolveReport rep = method == MSolveMethod::Transport ? solve_transport(cd, substeps)
                                                         : solve_picard(cd, tol, max_iter);
    Matrix3Field R =
        zero_curvature_residual(build_C(cd), build_D(rep.m, cd.sig), Axis::X, Axis::Y);
    rep.residual = frobenius_max(R);
    return rep;
}

Curve2dM curve2d_m(const RealField2D& k, double tol) {
    Antideriv a = antideriv_x(deriv_y(k));
    double scale = std::max(linf_norm(k), 1e-300);
    if (a.discarded_linf > tol * scale)
        throw ProjectionLoss(a.discarded_linf, "curve2d_m");
    return Curve2dM{a.value, a.discarded_linf};
}

RealField2D omega_2d(const RealField2D& k, const RealField2D& m, const ComplexField2D& V,
                     double imag_tol) {
    require_same(k.grid, m.grid);
    require_same(k.grid, V.grid);
    ComplexField2D c1 =
        (3.0 / 16.0) * (complexify(k * k + m * m) + 8.0 * (conj(V) + V));
    ComplexField2D c2 = 0.75 * (cd(0, 2) * (conj(V) - V) - complexify(k * m));
    double leak = std::max(linf_norm(imag_part(c1)), linf_norm(imag_part(c2)));
    double scale = std::max({l2_norm(c1), l2_norm(c2), 1e-300});
    if (leak > imag_tol * scale) throw ImaginaryLeak(leak);
    RealField2D kxx = deriv_xx(k), kyy = deriv_yy(k);
    return 0.25 * (kxx - 3.0 * kyy) - 0.25 * (k * k * k - k * (m * m)) +
           real_part(c1) * k + real_part(c2) * m;
}

RealField2D omega_2d_consistent(const RealField2D& k, const RealField2D& m,
                                const ComplexField2D& V) {
    require_same(k.grid, m.grid);
    RealField2D P = real_part(V), Q = imag_part(V);
    RealField2D kxx = deriv_xx(k), kyy = deriv_yy(k);
    RealField2D nl = -1.5 * (k * deriv_y(k) * m) + 6.0 * (m * m * deriv_y(m)) +
                     3.0 * (deriv_y(P) * m);
    return 0.25 * (kxx - 3.0 * kyy) - 0.25 * (k * k * k) + 3.0 * (P * k) + 3.0 * (Q * m) +
           adx(nl);
}

// ---- frame propagation ----------------------------------------------------

namespace {
std::vector<cd> vec_coeffs(const std::vector<double>& f) {
    int n = int(f.size());
    std::vector<cd> c(f.begin(), f.end());
    fft1(n, c.data(), -1);
    for (cd& v : c) v /= double(n);
    return c;
}
}  // namespace

FrameLine reconstruct_frame_x(const Grid1D& g, const std::vector<double>& k,
                              const std::vector<double>& tau,
                              const std::array<double, 9>& initial, Signature sig) {
    if (sig.e_sign != +1) throw UnsupportedSignature();
    if (int(k.size()) != g.n || int(tau.size()) != g.n)
        throw Error("line length does not match the grid");
    const double AL = 0.25 + std::sqrt(3.0) / 6.0, BE = 0.25 - std::sqrt(3.0) / 6.0;
    const double G1 = 0.5 - std::sqrt(3.0) / 6.0, G2 = 0.5 + std::sqrt(3.0) / 6.0;
    int sub = 2, n = g.n * sub;
    double h = g.l / n;
    auto kc = vec_coeffs(k), tc = vec_coeffs(tau);
    auto k1 = trig_resample(kc, g.n, g.l, n, G1 * h), k2 = trig_resample(kc, g.n, g.l, n, G2 * h);
    auto t1 = trig_resample(tc, g.n, g.l, n, G1 * h), t2 = trig_resample(tc, g.n, g.l, n, G2 * h);
    Matrix3d F;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) F(i, j) = initial[3 * i + j];
    FrameLine out;
    out.rot.resize(g.n + 1);  // final entry: after the full traversal
    Matrix3d Ra, Rb;
    Vector3d pa, pb, zero = Vector3d::Zero();
    for (int j = 0; j <= n; ++j) {
        if (j % sub == 0) {
            auto& r = out.rot[j / sub];
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) r[3 * a + b] = F(a, b);
        }
        if (j == n) break;
        Vector3d w1(-t1[j], 0, -k1[j]), w2(-t2[j], 0, -k2[j]);
        affine_exp(h * (AL * w1 + BE * w2), zero, Ra, pa);
        affine_exp(h * (BE * w1 + AL * w2), zero, Rb, pb);
        F = Rb * (Ra * F);
    }
    return out;
}

FrameField evolve_frame_step(const FrameField& f, const GCoefficients& gc, double dt) {
    if (f.sig.e_sign != +1) throw UnsupportedSignature();
    const Grid2D& g = f.e1.grid();
    require_same(g, gc.w1.grid);
    FrameField out = f;
    Matrix3d R;
    Vector3d p;
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            // triad rows evolve by the rotation generated by G = hat(w)
            Vector3d w(-gc.w1.at(ix, iy), -gc.w2.at(ix, iy), -gc.w3.at(ix, iy));
            affine_exp(dt * w, Vector3d::Zero(), R, p);
            Matrix3d F;
            for (int c = 0; c < 3; ++c) {
                F(0, c) = f.e1.c[c].at(ix, iy);
                F(1, c) = f.e2.c[c].at(ix, iy);
                F(2, c) = f.e3.c[c].at(ix, iy);
            }
            F = R * F;
            for (int c = 0; c < 3; ++c) {
                out.e1.c[c].at(ix, iy) = F(0, c);
                out.e2.c[c].at(ix, iy) = F(1, c);
                out.e3.c[c].at(ix, iy) = F(2, c);
            }
        }
    return out;
}

M0Coefficients m0_decompose(const VectorField3& s_t, const VectorField3& s_x,
                            const VectorField3& s_y, const FrameField& basis, double tol) {
    const Grid2D& g = basis.e1.grid();
    require_same(g, s_t.grid());
    double scale = 0;
    for (int c = 0; c < 3; ++c) scale = std::max(scale, linf_norm(s_t.c[c]));
    RealField2D along = dot(s_t, basis.e1);
    double dev = linf_norm(along);
    if (dev > tol * std::max(scale, 1e-300)) throw NonTangentInput(dev);
    M0Coefficients out;
    out.a2 = dot(s_t, basis.e2);
    out.a3 = dot(s_t, basis.e3);
    out.b2 = dot(s_x, basis.e2);
    out.b3 = dot(s_x, basis.e3);
    out.c2 = dot(s_y, basis.e2);
    out.c3 = dot(s_y, basis.e3);
    VectorField3 rec = out.a2 * basis.e2 + out.a3 * basis.e3;
    VectorField3 diff = rec - s_t;
    for (int c = 0; c < 3; ++c)
        out.reconstruction_residual = std::max(out.reconstruction_residual, linf_norm(diff.c[c]));
    return out;
}

}  // namespace solgeo
