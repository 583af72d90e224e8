#include <array>
#include <cmath>

#include "doctest.h"
#include "solgeo/frames.hpp"
#include "solgeo/random_fields.hpp"
#include "solgeo/spectral.hpp"

using namespace solgeo;

namespace {
RealField2D constf(const Grid2D& g, double v) {
    RealField2D f(g);
    for (auto& x : f.v) x = v;
    return f;
}
}  // namespace

TEST_CASE("coefficient matrices carry the pinned layout") {
    Grid2D g(8, 8, 1.0, 1.0);
    Matrix3Field C = build_C({constf(g, 2.0), constf(g, 0.5), Signature(+1)});
    CHECK(C.at(0, 1).at(0, 0) == 2.0);
    CHECK(C.at(1, 0).at(0, 0) == -2.0);
    CHECK(C.at(1, 2).at(0, 0) == 0.5);
    CHECK(C.at(2, 1).at(0, 0) == -0.5);
    CHECK(C.at(0, 0).at(0, 0) == 0.0);
    CHECK(C.at(0, 2).at(0, 0) == 0.0);

    Matrix3Field D = build_D({constf(g, 1.0), constf(g, 2.0), constf(g, 3.0)}, Signature(-1));
    CHECK(D.at(0, 1).at(0, 0) == 3.0);
    CHECK(D.at(0, 2).at(0, 0) == -2.0);
    CHECK(D.at(1, 0).at(0, 0) == 3.0);   // -E m3 with E = -1
    CHECK(D.at(1, 2).at(0, 0) == 1.0);
    CHECK(D.at(2, 0).at(0, 0) == -2.0);  // E m2
    CHECK(D.at(2, 1).at(0, 0) == -1.0);
}

TEST_CASE("constant-curvature frame traverses a circle and closes") {
    Grid1D g(256, 2 * pi);
    std::vector<double> k(g.n, 1.0), tau(g.n, 0.0);
    std::array<double, 9> id = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    FrameLine fl = reconstruct_frame_x(g, k, tau, id, Signature(+1));

    // e1' = k e2, e2' = -k e1 with k = 1: plane rotation by x
    double closure = 0, ortho = 0, exact = 0;
    for (int i = 0; i <= g.n; ++i) {
        const auto& r = fl.rot[i % (g.n + 1)];
        if (i == g.n)
            for (int c = 0; c < 9; ++c)
                closure = std::max(closure, std::abs(fl.rot[g.n][c] - fl.rot[0][c]));
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                double d = 0;
                for (int c = 0; c < 3; ++c) d += r[3 * a + c] * r[3 * b + c];
                ortho = std::max(ortho, std::abs(d - (a == b ? 1.0 : 0.0)));
            }
        if (i < g.n) {
            double x = g.x(i);
            double want[9] = {std::cos(x), std::sin(x), 0, -std::sin(x), std::cos(x), 0, 0, 0, 1};
            for (int c = 0; c < 9; ++c) exact = std::max(exact, std::abs(r[c] - want[c]));
        }
    }
    CHECK(closure < 1e-10);
    CHECK(ortho < 1e-10);
    CHECK(exact < 1e-9);
}

TEST_CASE("transport solve reproduces a manufactured transverse coefficient") {
    Grid2D g(64, 32, 2 * pi, 2 * pi);
    RealField2D k(g), m3(g);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            k.at(ix, iy) = 0.1 * std::cos(g.x(ix)) * std::sin(g.y(iy));
            // x-antiderivative of k_y
            m3.at(ix, iy) = 0.1 * std::sin(g.x(ix)) * std::cos(g.y(iy));
        }
    CurvatureData3 cdat{k, RealField2D(g), Signature(+1)};

    MSolveReport rep = solve_m_coefficients(cdat);
    CHECK(rep.iterations <= 50);
    CHECK(rep.residual < 1e-8);
    CHECK(linf_norm(rep.m.m3 - m3) < 1e-8);
    CHECK(linf_norm(rep.m.m1) < 1e-8);
    CHECK(linf_norm(rep.m.m2) < 1e-8);

    SUBCASE("the fixed-point variant agrees on the same data") {
        MSolveReport pic = solve_m_coefficients(cdat, 1e-12, 50, MSolveMethod::Picard);
        CHECK(pic.residual < 1e-8);
        CHECK(linf_norm(pic.m.m3 - m3) < 1e-10);
    }
}

TEST_CASE("transport solve closes on frame-derived data") {
    Grid2D g(64, 32, 20 * pi, 20 * pi);
    CurvaturePair p = consistent_curvature(g, 5, 0.05, 2);
    MSolveReport rep = solve_m_coefficients({p.k, p.tau, Signature(+1)});
    CHECK(rep.iterations <= 50);
    CHECK(rep.residual < 1e-8);
}

TEST_CASE("incompatible curvature data is reported, not absorbed") {
    Grid2D g(64, 32, 20 * pi, 20 * pi);
    CurvaturePair p = white_curvature(g, 1, 0.1, 3);
    MSolveReport rep = solve_m_coefficients({p.k, p.tau, Signature(+1)});
    CHECK(rep.residual > 1e-3);
}

TEST_CASE("planar transverse coefficient matches the manufactured form") {
    Grid2D g(64, 64, 2 * pi, 2 * pi);
    RealField2D k(g), want(g);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            k.at(ix, iy) = std::cos(2 * g.x(ix)) * std::sin(3 * g.y(iy));
            want.at(ix, iy) = 1.5 * std::sin(2 * g.x(ix)) * std::cos(3 * g.y(iy));
        }
    CHECK(linf_norm(curve2d_m(k).m - want) < 1e-12);

    RealField2D bad(g);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) bad.at(ix, iy) = std::sin(g.y(iy));
    CHECK_THROWS_AS(curve2d_m(bad), ProjectionLoss);
}

TEST_CASE("the two frequency assemblies differ by the local cubic group") {
    Grid2D g(64, 64, 2 * pi, 2 * pi);
    BandLimitedOpts o;
    o.kmax = 3;
    o.amp = 0.4;
    RealField2D k = band_limited(g, 9, o);
    ComplexField2D V = band_limited_complex(g, 10, o);
    RealField2D zero(g);
    // with no transverse part every nonlocal term drops and the gap is the
    // cubic (3/16) k^3
    RealField2D gap = omega_2d(k, zero, V) - omega_2d_consistent(k, zero, V);
    RealField2D cubic = (3.0 / 16.0) * (k * k * k);
    CHECK(linf_norm(gap - cubic) < 1e-12);
}

TEST_CASE("frame evolution is a pointwise rotation generated by the frequency triple") {
    Grid2D g(32, 32, 2 * pi, 2 * pi);
    FrameField f;
    f.sig = Signature(+1);
    f.e1 = VectorField3(g);
    f.e2 = VectorField3(g);
    f.e3 = VectorField3(g);
    BandLimitedOpts o;
    o.kmax = 2;
    o.amp = 0.7;
    RealField2D th = band_limited(g, 4, o);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            double t = th.at(ix, iy);
            f.e1.c[0].at(ix, iy) = std::cos(t);
            f.e1.c[1].at(ix, iy) = std::sin(t);
            f.e2.c[0].at(ix, iy) = -std::sin(t);
            f.e2.c[1].at(ix, iy) = std::cos(t);
            f.e3.c[2].at(ix, iy) = 1.0;
        }
    GCoefficients gc{band_limited(g, 5, o), band_limited(g, 6, o), band_limited(g, 7, o)};

    double dt = 1e-5;
    FrameField out = evolve_frame_step(f, gc, dt);

    double ortho = 0;
    RealField2D d11 = dot(out.e1, out.e1), d12 = dot(out.e1, out.e2), d23 = dot(out.e2, out.e3);
    ortho = std::max({linf_norm(d12), linf_norm(d23),
                      linf_norm(map1(d11, [](double v) { return v - 1; }))});
    CHECK(ortho < 1e-12);

    // first-order generator: e1_t = w3 e2 - w2 e3, e2_t = -w3 e1 + w1 e3
    VectorField3 v1 = (1.0 / dt) * (out.e1 - f.e1) - (gc.w3 * f.e2 - gc.w2 * f.e3);
    VectorField3 v2 = (1.0 / dt) * (out.e2 - f.e2) - (-1.0 * (gc.w3 * f.e1) + gc.w1 * f.e3);
    for (int c = 0; c < 3; ++c) {
        CHECK(linf_norm(v1.c[c]) < 1e-4);
        CHECK(linf_norm(v2.c[c]) < 1e-4);
    }
}

TEST_CASE("tangent-plane decomposition recovers planted coefficients") {
    Grid2D g(32, 32, 2 * pi, 2 * pi);
    FrameField basis;
    basis.sig = Signature(+1);
    basis.e1 = VectorField3(g);
    basis.e2 = VectorField3(g);
    basis.e3 = VectorField3(g);
    RealField2D a2(g), a3(g);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            double t = 0.3 * std::sin(g.x(ix)) + 0.2 * std::cos(g.y(iy));
            basis.e1.c[0].at(ix, iy) = std::cos(t);
            basis.e1.c[1].at(ix, iy) = std::sin(t);
            basis.e2.c[0].at(ix, iy) = -std::sin(t);
            basis.e2.c[1].at(ix, iy) = std::cos(t);
            basis.e3.c[2].at(ix, iy) = 1.0;
            a2.at(ix, iy) = std::sin(g.x(ix) + g.y(iy));
            a3.at(ix, iy) = std::cos(2 * g.y(iy));
        }
    VectorField3 s_t = a2 * basis.e2 + a3 * basis.e3;
    VectorField3 s_x = 2.0 * basis.e2;
    VectorField3 s_y = -1.0 * basis.e3;

    M0Coefficients m0 = m0_decompose(s_t, s_x, s_y, basis);
    CHECK(linf_norm(m0.a2 - a2) < 1e-13);
    CHECK(linf_norm(m0.a3 - a3) < 1e-13);
    CHECK(linf_norm(map1(m0.b2, [](double v) { return v - 2; })) < 1e-13);
    CHECK(linf_norm(map1(m0.c3, [](double v) { return v + 1; })) < 1e-13);
    CHECK(m0.reconstruction_residual < 1e-13);

    VectorField3 bad = s_t + 0.5 * basis.e1;
    CHECK_THROWS_AS(m0_decompose(bad, s_x, s_y, basis), NonTangentInput);
}
