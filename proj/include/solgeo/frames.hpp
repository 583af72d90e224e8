#ifndef SOLGEO_FRAMES_HPP
#define SOLGEO_FRAMES_HPP

#include <array>
#include <vector>

#include "solgeo/matrix_field.hpp"

namespace solgeo {

struct Signature {
    int e_sign = +1;  // +1 or -1
    Signature() = default;
    explicit Signature(int s) : e_sign(s) {
        if (s != 1 && s != -1) throw Error("signature must be +1 or -1");
    }
};

struct CurvatureData3 {
    RealField2D k, tau;
    Signature sig;
};

struct DCoefficients {
    RealField2D m1, m2, m3;
};

struct GCoefficients {
    RealField2D w1, w2, w3;
};

struct FrameField {
    VectorField3 e1, e2, e3;
    Signature sig;
};

enum class Axis { X, Y };

// rows (0, k, 0), (-E k, 0, tau), (0, -tau, 0)
Matrix3Field build_C(const CurvatureData3& cd);
// rows (0, m3, -m2), (-E m3, 0, m1), (E m2, -m1, 0)
Matrix3Field build_D(const DCoefficients& dc, Signature sig);
// rows (0, w3, -w2), (-E w3, 0, w1), (E w2, -w1, 0)
Matrix3Field build_G(const GCoefficients& gc, Signature sig);

// d_{d2} A - d_{d1} B + [A, B]; call sites read like the compatibility conditions
Matrix3Field zero_curvature_residual(const Matrix3Field& A, const Matrix3Field& B, Axis d1,
                                     Axis d2);

enum class MSolveMethod { Transport, Picard };

struct MSolveReport {
    DCoefficients m;
    int iterations = 0;
    double residual = 0;        // Frobenius-max of the compatibility residual
    double obstruction = 0;     // periodic-closure defect of the line solves (transport)
    double last_delta = 0;      // final iterate change (picard)
    double min_closure_gap = 0; // smallest |I - monodromy| singular value kept
};

// Solve for the y-direction coefficients (m1, m2, m3) given (k, tau).
//
// Transport (default): the compatibility conditions restricted to one y line
// form a linear affine ODE in x for the coefficient vector; each line is
// integrated with a 4th-order commutator-free Magnus scheme on `substeps`
// subintervals per grid cell, closed periodically through the monodromy
// matrix (truncated SVD solve: rotation angles near 0 leave a null space).
// Completes in one pass; `iterations` reports 1.
//
// Picard: fixed-point iteration of the three scalar recursions with per-sweep
// x-mean completion from the 3x3 per-line mean system.  Converges only when
// the data admits an x-periodic frame and stalls otherwise; kept as a
// diagnostic for exactly that reason.  Throws NoConvergence on stall.
MSolveReport solve_m_coefficients(const CurvatureData3& cd, double tol = 1e-10,
                                  int max_iter = 50,
                                  MSolveMethod method = MSolveMethod::Transport,
                                  int substeps = 4);

// m = x-antiderivative of k_y (2D-curve reduction)
struct Curve2dM {
    RealField2D m;
    double discarded = 0;
};
Curve2dM curve2d_m(const RealField2D& k, double tol = 1e-6);

// curve-evolution frequency for the 2D reduction, printed coefficient set:
//   w = (k_xx - 3 k_yy)/4 - (k^3 - k m^2)/4 + c1 k + c2 m
//   c1 = 3(k^2 + m^2)/16 + 3 Re V,  c2 = 3 Im V - 3 k m / 4
RealField2D omega_2d(const RealField2D& k, const RealField2D& m, const ComplexField2D& V,
                     double imag_tol = 1e-8);

// alternative assembly for which d/dx w reproduces the evolution of k/2
// identically (the local cubic terms are traded for x-antiderivative terms);
// used to pin down where the printed coefficient set deviates
RealField2D omega_2d_consistent(const RealField2D& k, const RealField2D& m,
                                const ComplexField2D& V);

// one orthonormal triad per x sample
struct FrameLine {
    std::vector<std::array<double, 9>> rot;  // row i = e_i components
};
FrameLine reconstruct_frame_x(const Grid1D& g, const std::vector<double>& k,
                              const std::vector<double>& tau,
                              const std::array<double, 9>& initial, Signature sig);

FrameField evolve_frame_step(const FrameField& f, const GCoefficients& gc, double dt);

struct M0Coefficients {
    RealField2D a2, a3, b2, b3, c2, c3;
    double reconstruction_residual = 0;
};
M0Coefficients m0_decompose(const VectorField3& s_t, const VectorField3& s_x,
                            const VectorField3& s_y, const FrameField& basis,
                            double tol = 1e-8);

}  // namespace solgeo

#endif
