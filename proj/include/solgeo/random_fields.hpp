#ifndef SOLGEO_RANDOM_FIELDS_HPP
#define SOLGEO_RANDOM_FIELDS_HPP

#include <cstdint>
#include <random>

#include "solgeo/field.hpp"

namespace solgeo {

// Deterministic normal deviates (hand-rolled Box-Muller so streams are
// identical across standard libraries).
struct Rng {
    std::mt19937_64 eng;
    bool have_spare = false;
    double spare = 0;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    double uniform();  // [0,1)
    double normal();
};

struct BandLimitedOpts {
    int kmax = 4;
    double amp = 1.0;      // resulting linf norm
    bool zero_xmean = false;  // skip all kx = 0 modes
    bool zero_ymean = false;
    bool even_x = false;   // f(-x, y) = f(x, y)
};

RealField2D band_limited(const Grid2D& g, std::uint64_t seed, const BandLimitedOpts& o = {});
ComplexField2D band_limited_complex(const Grid2D& g, std::uint64_t seed,
                                    const BandLimitedOpts& o = {});

// unit vector field: precessing base plus a band-limited perturbation, normalized
VectorField3 unit_field(const Grid2D& g, std::uint64_t seed, double delta = 0.2, int kmax = 3,
                        bool even_x = false);

struct CurvaturePair {
    RealField2D k, tau;
};
// curvature/torsion extracted from the x-lines of a smooth unit field, so the
// pair is compatible with an x-periodic frame by construction
CurvaturePair consistent_curvature(const Grid2D& g, std::uint64_t seed, double delta = 0.12,
                                   int kmax = 4, double theta = pi / 4);
// unrelated random pair (no compatibility), nonzero means
CurvaturePair white_curvature(const Grid2D& g, std::uint64_t seed, double amp = 0.1,
                              int kmax = 4);

std::vector<double> band_limited_line(const Grid1D& g, std::uint64_t seed, int kmax,
                                      double amp);

}  // namespace solgeo

#endif
