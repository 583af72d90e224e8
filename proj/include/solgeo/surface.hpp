#ifndef SOLGEO_SURFACE_HPP
#define SOLGEO_SURFACE_HPP

#include <string>

#include "solgeo/frames.hpp"
#include "solgeo/matrix_field.hpp"

namespace solgeo {

// Immersed surface sampled over the periodic parameter box.  Oracle surfaces
// carry closed-form derivatives; without them the position components must be
// periodic themselves so the spectral fallback applies (torus-like embeddings).
struct SurfacePatch {
    VectorField3 r;
    bool has_analytic = false;
    VectorField3 rx, ry, rxx, rxy, ryy;
};

SurfacePatch surface_plane(const Grid2D& g);
SurfacePatch surface_torus(const Grid2D& g, double R, double rho);
// profile "circle": radius lx/(2*pi) so one x-period closes the cross-section
SurfacePatch surface_cylinder(const Grid2D& g, const std::string& profile = "circle");
SurfacePatch surface_graph(const Grid2D& g, const RealField2D& h);
// "plane" | "torus:R,rho" | "cylinder:circle"
SurfacePatch make_named_surface(const Grid2D& g, const std::string& name);

struct FundamentalForms {
    RealField2D e_form, f_form, g_form;  // first form coefficients
    RealField2D l_form, m_form, n_form;  // second form coefficients
    VectorField3 n_vec;                  // unit normal
    VectorField3 rx, ry;                 // tangent samples, reused downstream
};
FundamentalForms fundamental_forms(const SurfacePatch& p);

struct ChristoffelField {
    RealField2D g111, g112, g122;  // upper index 1; lower (11), (12), (22)
    RealField2D g211, g212, g222;

    const RealField2D& at(int k, int i, int j) const {
        int lower = i + j;  // 0,1,2 for (11),(12),(22) with i,j in {0,1}
        const RealField2D* rows[2][3] = {{&g111, &g112, &g122}, {&g211, &g212, &g222}};
        return *rows[k][lower];
    }
};
ChristoffelField christoffel(const FundamentalForms& ff);

struct Weingarten {
    RealField2D p1, p2, q1, q2;
};
Weingarten weingarten(const FundamentalForms& ff);

// coefficient matrices of the first-order system on Z = (r_x, r_y, n)
struct GaussWeingartenMatrices {
    Matrix3Field a, b;  // Z_x = a Z, Z_y = b Z
};
GaussWeingartenMatrices gauss_weingarten_matrices(const FundamentalForms& ff,
                                                  const ChristoffelField& ch);

struct GaussCodazziResiduals {
    double gauss_l2 = 0, gauss_linf = 0, gauss_rel = 0;
    double codazzi_l2 = 0, codazzi_linf = 0, codazzi_rel = 0;
    double matrix_l2 = 0, matrix_linf = 0, matrix_rel = 0;
};
// residuals from (possibly tampered) form data alone
GaussCodazziResiduals gauss_codazzi_from_forms(const FundamentalForms& ff);
GaussCodazziResiduals gauss_codazzi_residual(const SurfacePatch& p);

// adapted frame (r_x, n, r_x ^ n) for unit-speed x-lines with orthogonal
// parameter curves, plus the curvature/torsion extraction that feeds the
// envelope map
struct TrihedralResult {
    FrameField frame;
    RealField2D k, tau;
};
TrihedralResult trihedral(const SurfacePatch& p, double tol = 1e-6);

}  // namespace solgeo

#endif
