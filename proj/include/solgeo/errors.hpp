#ifndef SOLGEO_ERRORS_HPP
#define SOLGEO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace solgeo {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct GridMismatch : Error {
    explicit GridMismatch(const std::string& msg = "grid mismatch") : Error(msg) {}
};

// a constraint inversion was asked to produce content on a killed mode
struct NonSolvableConstraint : Error {
    double offending = 0;
    explicit NonSolvableConstraint(const std::string& msg, double off = 0)
        : Error(msg), offending(off) {}
};

// rhs energy on a null mode of an indefinite symbol
struct NullModeConflict : Error {
    double offending = 0;
    explicit NullModeConflict(const std::string& msg, double off = 0)
        : Error(msg), offending(off) {}
};

struct NoConvergence : Error {
    int iterations;
    double last_delta;
    NoConvergence(int it, double d)
        : Error("no convergence after " + std::to_string(it) +
                " iterations, last delta " + std::to_string(d)),
          iterations(it), last_delta(d) {}
};

struct ProjectionLoss : Error {
    double lost;
    explicit ProjectionLoss(double l, const std::string& where = "")
        : Error("projected-out mean content " + std::to_string(l) +
                (where.empty() ? "" : " in " + where)),
          lost(l) {}
};

struct ImaginaryLeak : Error {
    double leak;
    explicit ImaginaryLeak(double l)
        : Error("imaginary residue " + std::to_string(l) + " above tolerance"), leak(l) {}
};

struct UnsupportedSignature : Error {
    UnsupportedSignature() : Error("operation requires the +1 signature") {}
};

struct NonTangentInput : Error {
    double deviation;
    explicit NonTangentInput(double d)
        : Error("input not tangent, deviation " + std::to_string(d)), deviation(d) {}
};

struct NonUnit : Error {
    double deviation;
    explicit NonUnit(double d)
        : Error("field norm deviates from its signature by " + std::to_string(d)),
          deviation(d) {}
};

struct S3NotZero : Error {
    explicit S3NotZero(double d)
        : Error("third component must vanish, max " + std::to_string(d)) {}
};

struct ZeroGaugeParam : Error {
    ZeroGaugeParam() : Error("gauge parameter b must be nonzero") {}
};

struct BlowupDetected : Error {
    double linf;
    int step;
    BlowupDetected(double l, int s)
        : Error("blow-up at step " + std::to_string(s) + ", linf " + std::to_string(l)),
          linf(l), step(s) {}
};

struct InsufficientSnapshots : Error {
    explicit InsufficientSnapshots(int n)
        : Error("need at least 3 snapshots, got " + std::to_string(n)) {}
};

struct DegenerateSupport : Error {
    double fraction;
    explicit DegenerateSupport(double f)
        : Error("field above threshold on only " + std::to_string(f) + " of the domain"),
          fraction(f) {}
};

struct DegenerateImmersion : Error {
    double min_norm;
    explicit DegenerateImmersion(double m)
        : Error("tangent cross product degenerates, min norm " + std::to_string(m)),
          min_norm(m) {}
};

struct SingularMetric : Error {
    double min_det;
    explicit SingularMetric(double d)
        : Error("metric determinant too small: " + std::to_string(d)), min_det(d) {}
};

struct GaugeViolation : Error {
    double e_dev, f_dev;
    GaugeViolation(double e, double f)
        : Error("trihedral preconditions fail: |E-1| = " + std::to_string(e) +
                ", |F| = " + std::to_string(f)),
          e_dev(e), f_dev(f) {}
};

struct NonPeriodicPhase : Error {
    double linear_coeff;
    explicit NonPeriodicPhase(double c)
        : Error("linear phase coefficient " + std::to_string(c) +
                " does not wind an integer number of times"),
          linear_coeff(c) {}
};

}  // namespace solgeo

#endif
