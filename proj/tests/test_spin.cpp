#include <cmath>

#include "doctest.h"
#include "solgeo/random_fields.hpp"
#include "solgeo/spectral.hpp"
#include "solgeo/spin_models.hpp"

using namespace solgeo;

namespace {

SpinField planar_field(const Grid2D& g, std::uint64_t seed, double amp) {
    BandLimitedOpts o;
    o.kmax = 3;
    o.amp = amp;
    RealField2D th = band_limited(g, seed, o);
    SpinField s{VectorField3(g), Signature(+1)};
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            s.s.c[0].at(ix, iy) = std::cos(th.at(ix, iy));
            s.s.c[1].at(ix, iy) = std::sin(th.at(ix, iy));
        }
    return s;
}

Mat2c pauli_comb(double v1, double v2, double v3) {
    Mat2c m;
    m(0, 0) = v3;
    m(0, 1) = cd(v1, -v2);
    m(1, 0) = cd(v1, v2);
    m(1, 1) = -v3;
    return m;
}

}  // namespace

TEST_CASE("normalization guard accepts the sphere, rejects off-shell data") {
    Grid2D g(32, 32, 2 * pi, 2 * pi);
    SpinField s{unit_field(g, 1), Signature(+1)};
    CHECK_NOTHROW(check_normalization(s));
    s.s.c[0] = 1.1 * s.s.c[0];
    CHECK_THROWS_AS(check_normalization(s), NonUnit);
}

TEST_CASE("matrix and vector spin pictures are inverse") {
    Grid2D g(32, 32, 2 * pi, 2 * pi);
    SpinField s{unit_field(g, 2), Signature(+1)};
    VectorField3 back = matrix_to_vec(vec_to_matrix(s));
    for (int c = 0; c < 3; ++c) CHECK(linf_norm(back.c[c] - s.s.c[c]) < 1e-14);

    // unit length means the matrix squares to the identity
    SpinMatrixField m = vec_to_matrix(s);
    Mat2c sq = matmul(m.at(3, 5), m.at(3, 5));
    CHECK(std::abs(sq(0, 0) - cd(1)) < 1e-12);
    CHECK(std::abs(sq(0, 1)) < 1e-12);
}

TEST_CASE("matrix commutator trace reduces to the vector triple product") {
    Grid2D g(48, 48, 2 * pi, 2 * pi);
    SpinField s{unit_field(g, 3), Signature(+1)};
    VectorField3 sx, sy;
    for (int c = 0; c < 3; ++c) {
        sx.c[c] = deriv_x(s.s.c[c]);
        sy.c[c] = deriv_y(s.s.c[c]);
    }
    RealField2D triple = dot(s.s, cross(sy, sx));
    double worst = 0, scale = linf_norm(triple) + 1e-300;
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            Mat2c S = pauli_comb(s.s.c[0].at(ix, iy), s.s.c[1].at(ix, iy), s.s.c[2].at(ix, iy));
            Mat2c Sx = pauli_comb(sx.c[0].at(ix, iy), sx.c[1].at(ix, iy), sx.c[2].at(ix, iy));
            Mat2c Sy = pauli_comb(sy.c[0].at(ix, iy), sy.c[1].at(ix, iy), sy.c[2].at(ix, iy));
            cd lhs = trace(matmul(S, commutator(Sy, Sx)));
            cd rhs = cd(0, 4) * triple.at(ix, iy);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    CHECK(worst / scale < 1e-12);
}

TEST_CASE("spin flow velocities stay tangent to the sphere") {
    Grid2D g(64, 64, 2 * pi, 2 * pi);
    // even-in-x data: the completed nonlocal potentials differentiate back
    // without a leftover line mean
    SpinField s{unit_field(g, 4, 0.15, 3, true), Signature(+1)};
    ModelParams p;

    CHECK(linf_norm(dot(s.s, rhs_m1(s).s_t)) < 1e-9);
    CHECK(linf_norm(dot(s.s, rhs_mxxii(s, p).s_t)) < 1e-9);
    CHECK(linf_norm(dot(s.s, rhs_lle2d(s).s_t)) < 1e-11);

    // the anisotropic potential solve needs a box where its symbol only
    // vanishes at the origin
    Grid2D gi(64, 64, 2 * pi, 2 * pi * std::sqrt(2.0));
    SpinField si{unit_field(gi, 4, 0.15, 3, true), Signature(+1)};
    CHECK(linf_norm(dot(si.s, rhs_ishimori(si, p).s_t)) < 1e-10);
}

TEST_CASE("third-order planar flow: tangency, closed third component") {
    Grid2D g(64, 64, 2 * pi, 2 * pi);
    SpinField s = planar_field(g, 6, 0.5);
    SpinRhs r = rhs_mxvii(s);
    CHECK(linf_norm(dot(s.s, r.s_t)) < 1e-10);
    CHECK(linf_norm(r.s_t.c[2]) == 0.0);  // stays in the plane exactly

    SpinField generic{unit_field(g, 7), Signature(+1)};
    CHECK_THROWS_AS(rhs_mxvii(generic), S3NotZero);
}

TEST_CASE("mean-flow potential solves its anisotropic constraint") {
    Grid2D g(64, 64, 2 * pi, 2 * pi * std::sqrt(2.0));
    SpinField s{unit_field(g, 8, 0.15, 3, true), Signature(+1)};
    ModelParams p;
    SpinRhs r = rhs_ishimori(s, p);
    VectorField3 sx, sy;
    for (int c = 0; c < 3; ++c) {
        sx.c[c] = deriv_x(s.s.c[c]);
        sy.c[c] = deriv_y(s.s.c[c]);
    }
    RealField2D want = p.alpha2 * dot(s.s, cross(sy, sx));
    RealField2D got = p.alpha2 * deriv_yy(r.u) - 0.25 * deriv_xx(r.u);
    CHECK(linf_norm(got - want) / (linf_norm(want) + 1e-300) < 1e-9);
    CHECK(r.aux_diag < 1e-10);
}

TEST_CASE("scalar frequency forms") {
    Grid2D g(64, 64, 2 * pi, 2 * pi);
    SUBCASE("transverse-free input reduces to the kdv-type frequency") {
        RealField2D k(g), want(g);
        for (int iy = 0; iy < g.ny; ++iy)
            for (int ix = 0; ix < g.nx; ++ix) {
                double x = g.x(ix);
                k.at(ix, iy) = 0.3 * std::cos(2 * x);
                want.at(ix, iy) = 3 * 0.09 * std::cos(2 * x) * std::cos(2 * x) -
                                  4 * 0.3 * std::cos(2 * x);
            }
        ModelParams p;
        CHECK(linf_norm(omega_mx(k, p) - want) < 1e-12);
    }
    SUBCASE("the two readings of the first constraint coincide for mean-free input") {
        RealField2D k(g);
        for (int iy = 0; iy < g.ny; ++iy)
            for (int ix = 0; ix < g.nx; ++ix)
                k.at(ix, iy) = 0.2 * std::cos(g.x(ix) + 2 * g.y(iy));
        OmegaMxi w = omega_mxi(k, 1.0, 1.0);
        CHECK(w.constraint_gap < 1e-12);
    }
    SUBCASE("an x-mean obstruction is a hard error") {
        RealField2D k(g);
        for (auto& v : k.v) v = 0.1;
        CHECK_THROWS_AS(omega_mxi(k, 1.0, 1.0), ProjectionLoss);
    }
}

TEST_CASE("one-directional data reduces the flows to their line limits") {
    Grid2D g(64, 64, 2 * pi, 2 * pi);
    RealField2D th(g);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) th.at(ix, iy) = 0.4 * std::sin(g.x(ix));
    SpinField s{VectorField3(g), Signature(+1)};
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            s.s.c[0].at(ix, iy) = std::cos(th.at(ix, iy));
            s.s.c[2].at(ix, iy) = std::sin(th.at(ix, iy));
        }

    // flux form collapses when nothing depends on y
    SpinRhs m1 = rhs_m1(s);
    for (int c = 0; c < 3; ++c) CHECK(linf_norm(m1.s_t.c[c]) < 1e-13);
    ModelParams p;
    SpinRhs mxxii = rhs_mxxii(s, p);
    for (int c = 0; c < 3; ++c) CHECK(linf_norm(mxxii.s_t.c[c]) == 0.0);

    // precession flow drops to one line: compare against a per-line evaluation
    SpinRhs lle = rhs_lle2d(s);
    Grid1D gl(g.nx, g.lx);
    std::vector<double> comp(g.nx);
    VectorField3 sxx1d(g);
    for (int c = 0; c < 3; ++c) {
        for (int ix = 0; ix < g.nx; ++ix) comp[ix] = s.s.c[c].at(ix, 0);
        auto d1 = deriv_line(gl, comp);
        auto d2 = deriv_line(gl, d1);
        for (int iy = 0; iy < g.ny; ++iy)
            for (int ix = 0; ix < g.nx; ++ix) sxx1d.c[c].at(ix, iy) = d2[ix];
    }
    VectorField3 want = cross(s.s, sxx1d);
    for (int c = 0; c < 3; ++c) CHECK(linf_norm(lle.s_t.c[c] - want.c[c]) < 1e-11);
}

TEST_CASE("model registry names the seven flows") {
    const auto& reg = spin_model_registry();
    CHECK(reg.size() == 7);
    bool has_m1 = false, has_mx = false;
    for (const auto& m : reg) {
        has_m1 = has_m1 || m.id == "m1";
        has_mx = has_mx || m.id == "mx";
    }
    CHECK(has_m1);
    CHECK(has_mx);
}
