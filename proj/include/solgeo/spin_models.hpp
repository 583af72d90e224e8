#ifndef SOLGEO_SPIN_MODELS_HPP
#define SOLGEO_SPIN_MODELS_HPP

#include <string>
#include <vector>

#include "solgeo/frames.hpp"
#include "solgeo/matrix_field.hpp"

namespace solgeo {

struct SpinField {
    VectorField3 s;
    Signature sig;
};

struct ModelParams {
    double alpha2 = 1.0;   // the dispersion anisotropy enters only squared
    double a = 0.0, b = 0.0;
    double b_gauge = 1.0;  // must stay nonzero where it divides
};

// |S|^2 for sig=+1, S1^2+S2^2-S3^2 for sig=-1; throws NonUnit beyond tol
void check_normalization(const SpinField& s, double tol = 1e-8);

// S = sum_k S_k sigma_k and back
SpinMatrixField vec_to_matrix(const SpinField& s, double tol = 1e-8);
VectorField3 matrix_to_vec(const SpinMatrixField& m);

struct SpinRhs {
    VectorField3 s_t;
    RealField2D u;        // auxiliary potential where the model has one
    ComplexField2D v_aux; // complex auxiliary (third-order models)
    RealField2D v1;       // second auxiliary
    double aux_diag = 0;  // consistency diagnostic (model dependent)
};

// S_t = (S x S_y + u S)_x with u_x = -S.(S_x x S_y)
SpinRhs rhs_m1(const SpinField& s);
// S_t = S x (S_xx + S_yy)
SpinRhs rhs_lle2d(const SpinField& s);
// vector form of i S_t + [S, S_xx/4 + a2 S_yy]/2 + i u_y S_x + i u_x S_y = 0,
// a2 u_yy - u_xx/4 = a2 * S.(S_y x S_x)
SpinRhs rhs_ishimori(const SpinField& s, const ModelParams& p);
// two-component case (s3 = 0): S_t = S_xxx/4 - 3 S_xyy/4 + C1 S_x + C2 S_y + C3 S;
// aux_diag reports the gap between the printed C3 and the closed form used
SpinRhs rhs_mxvii(const SpinField& s);
// -i S_t = ([S, S_y] + 2i u S)_x / 2 + (i/2) V1 S_x - 2i b^2 S_y
SpinRhs rhs_mxxii(const SpinField& s, const ModelParams& p);

// w = 3 k^2 + k_xx + 3 a2 w2 with w2_xx = k_yy
RealField2D omega_mx(const RealField2D& k, const ModelParams& p);

struct OmegaMxi {
    RealField2D omega;
    double constraint_gap = 0;  // the two printed readings of the v constraint
};
// w = alpha q_xxx + beta q_yyy - 3 alpha (v q)_x - 3 beta (w2 q)_y,
// q = x-antiderivative of k, v_y = k, w2_x = x-antiderivative of k_y
OmegaMxi omega_mxi(const RealField2D& k, double alpha, double beta, double tol = 1e-8);

struct ModelInfo {
    std::string id;
    std::string description;
    std::string params_schema;  // JSON
};
const std::vector<ModelInfo>& spin_model_registry();

}  // namespace solgeo

#endif
