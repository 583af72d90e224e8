#ifndef SOLGEO_SOLVERS_HPP
#define SOLGEO_SOLVERS_HPP

#include <map>
#include <string>
#include <vector>

#include "solgeo/frames.hpp"
#include "solgeo/spectral.hpp"

namespace solgeo {

struct TimeSteppingConfig {
    double dt = 1e-3;
    int n_steps = 100;
    std::string scheme;  // empty = solver default; "rk4_integrating_factor",
                         // "split_step" (4th-order composition), "split_step2", "rk4"
    bool dealias = true;
    int snapshot_every = 1;
    double blowup_factor = 1e3;
};

struct Trajectory {
    Grid2D grid;
    std::vector<double> times;
    std::vector<ComplexField2D> states;
    std::map<std::string, std::vector<double>> conserved_series;
    std::map<std::string, double> diagnostics;
};

struct Trajectory1D {
    Grid1D grid;
    std::vector<double> times;
    std::vector<std::vector<cd>> states;
    std::map<std::string, std::vector<double>> conserved_series;
};

// i q_t + q_xx + 2 E |q|^2 q = 0
Trajectory1D solve_nls(const std::vector<cd>& q0, const Grid1D& g, Signature sig,
                       const TimeSteppingConfig& cfg);
// q_t = 6 q q_x + q_xxx + 3 a2 * x-antideriv(q_yy)
Trajectory solve_kp(const RealField2D& q0, double alpha2, const TimeSteppingConfig& cfg);
// q_t = al q_xxx + be q_yyy - 3 al (v q)_x - 3 be (w q)_y, v_y = q_x, w_x = q_y
Trajectory solve_nv(const RealField2D& q0, double alpha, double beta,
                    const TimeSteppingConfig& cfg);
// q_t = (d/dz)^3 q + 3 V q_z + (3/2) V_z q + conjugate group, dV/dzbar = (q^2)_z;
// the state must stay real -- the imaginary content is tracked in diagnostics
Trajectory solve_mnv(const RealField2D& q0, const TimeSteppingConfig& cfg);
// i q_t + q_xx/4 + a2 q_yy + v q = 0, a2 v_yy - v_xx/4 = -2(a2 (pq)_yy + (pq)_xx/4)
Trajectory solve_ds(const ComplexField2D& q0, Signature sig, double alpha2,
                    const TimeSteppingConfig& cfg);
// i q_t + q_xy + i (V q)_x = 0, V_x = E (|q|^2)_y
Trajectory solve_strachan(const ComplexField2D& q0, Signature sig,
                          const TimeSteppingConfig& cfg);

struct EqParams {
    double alpha2 = 1.0;
    double alpha = 1.0, beta = 1.0;
    Signature sig;
};

// plain (non-dealiased) right-hand sides, q_t = F(q); shared by the residual
// evaluator and the identity checks
ComplexField2D rhs_kp(const ComplexField2D& q, double alpha2);
ComplexField2D rhs_nv(const ComplexField2D& q, double alpha, double beta);
ComplexField2D rhs_mnv_field(const ComplexField2D& q);
ComplexField2D rhs_ds(const ComplexField2D& q, Signature sig, double alpha2);
ComplexField2D rhs_strachan(const ComplexField2D& q, Signature sig);

struct ResidualSample {
    double time;
    double l2;
    double linf;
};
// centered time differencing against the printed equation: 4th order with >= 5
// snapshots, 2nd order with 3 or 4; throws InsufficientSnapshots below 3
std::vector<ResidualSample> residual(const std::string& eq_id, const Trajectory& traj,
                                     const EqParams& p = {});
std::vector<ResidualSample> residual_nls(const Trajectory1D& traj, Signature sig);

// operator-triple identity applied to a test field f:
// q_t f + [L, A] f - B (L f), with L = dz dzbar + q, A = dz^3 + V dz + conj
// group, B = multiplication by V_z + conj(V)_zbar.  The commutator of the two
// constant-coefficient parts is dropped analytically, so every computed term
// carries a factor of q or V and the q = 0 case is exactly zero.
struct LabTripleResult {
    double residual_rel;
    double term_scale;
};
LabTripleResult nv_lab_triple_residual(const RealField2D& q, const ComplexField2D& V,
                                       const ComplexField2D& f);

std::map<std::string, double> conserved(const std::string& eq_id, const ComplexField2D& state);
std::map<std::string, double> conserved_nls(const Grid1D& g, const std::vector<cd>& state);

struct EquationDescriptor {
    std::string id;
    std::string state_kind;  // "real" | "complex"
    std::string description;
    std::string params_schema;
    bool residual_only = false;
};
const std::vector<EquationDescriptor>& equation_registry();

}  // namespace solgeo

#endif
