#include "solgeo/random_fields.hpp"

#include <cmath>

#include "solgeo/spectral.hpp"

namespace solgeo {

double Rng::uniform() { return double(eng() >> 11) * 0x1.0p-53; }

double Rng::normal() {
    if (have_spare) {
        have_spare = false;
        return spare;
    }
    double u1 = 0;
    while (u1 <= 0) u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    spare = r * std::sin(2 * pi * u2);
    have_spare = true;
    return r * std::cos(2 * pi * u2);
}

namespace {

int wrap(int j, int n) { return ((j % n) + n) % n; }

ComplexField2D band_limited_spectrum(const Grid2D& g, Rng& rng, const BandLimitedOpts& o,
                                     bool hermitian) {
    ComplexField2D F(g);
    int jx_lo = o.even_x ? 0 : -o.kmax;
    for (int jx = jx_lo; jx <= o.kmax; ++jx)
        for (int jy = -o.kmax; jy <= o.kmax; ++jy) {
            if (jx == 0 && jy == 0) continue;
            if (o.zero_xmean && jx == 0) continue;
            if (o.zero_ymean && jy == 0) continue;
            cd a(rng.normal(), rng.normal());
            // an even-in-x real field needs real coefficients on the jy = 0 row,
            // otherwise the reflection and conjugation writes fight over the slot
            if (o.even_x && hermitian && jy == 0) a = cd(a.real(), 0.0);
            F.at(wrap(jx, g.nx), wrap(jy, g.ny)) = a;
            if (hermitian) F.at(wrap(-jx, g.nx), wrap(-jy, g.ny)) = std::conj(a);
            if (o.even_x) {
                F.at(wrap(-jx, g.nx), wrap(jy, g.ny)) = a;
                if (hermitian) F.at(wrap(jx, g.nx), wrap(-jy, g.ny)) = std::conj(a);
            }
        }
    return F;
}

}  // namespace

RealField2D band_limited(const Grid2D& g, std::uint64_t seed, const BandLimitedOpts& o) {
    Rng rng(seed);
    RealField2D f = real_part(to_physical(band_limited_spectrum(g, rng, o, true)));
    double m = linf_norm(f);
    return (m > 0 ? o.amp / m : 0.0) * f;
}

ComplexField2D band_limited_complex(const Grid2D& g, std::uint64_t seed,
                                    const BandLimitedOpts& o) {
    Rng rng(seed);
    ComplexField2D f = to_physical(band_limited_spectrum(g, rng, o, false));
    double m = linf_norm(f);
    return (m > 0 ? o.amp / m : 0.0) * f;
}

VectorField3 unit_field(const Grid2D& g, std::uint64_t seed, double delta, int kmax,
                        bool even_x) {
    double theta = pi / 4;
    VectorField3 s(g);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            double phi = even_x
                             ? 0.8 * std::cos(2 * pi * g.x(ix) / g.lx) +
                                   0.3 * std::sin(2 * pi * g.y(iy) / g.ly)
                             : 2 * pi * g.x(ix) / g.lx + 0.3 * std::sin(2 * pi * g.y(iy) / g.ly);
            s.c[0].at(ix, iy) = std::sin(theta) * std::cos(phi);
            s.c[1].at(ix, iy) = std::sin(theta) * std::sin(phi);
            s.c[2].at(ix, iy) = std::cos(theta);
        }
    BandLimitedOpts o;
    o.kmax = kmax;
    o.amp = 1.0;
    o.even_x = even_x;
    for (int c = 0; c < 3; ++c) {
        RealField2D p = band_limited(g, seed * 3 + c, o);
        s.c[c] = s.c[c] + delta * p;
    }
    RealField2D n = dot(s, s);
    for (int c = 0; c < 3; ++c)
        s.c[c] = map2(s.c[c], n, [](double v, double nn) { return v / std::sqrt(nn); });
    return s;
}

CurvaturePair consistent_curvature(const Grid2D& g, std::uint64_t seed, double delta, int kmax,
                                   double theta) {
    VectorField3 e1(g);
    for (int iy = 0; iy < g.ny; ++iy)
        for (int ix = 0; ix < g.nx; ++ix) {
            double phi = 2 * pi * g.x(ix) / g.lx + 0.3 * std::sin(2 * pi * g.y(iy) / g.ly);
            e1.c[0].at(ix, iy) = std::sin(theta) * std::cos(phi);
            e1.c[1].at(ix, iy) = std::sin(theta) * std::sin(phi);
            e1.c[2].at(ix, iy) = std::cos(theta);
        }
    BandLimitedOpts o;
    o.kmax = kmax;
    o.amp = 1.0;
    for (int c = 0; c < 3; ++c) {
        RealField2D p = band_limited(g, seed * 7 + c, o);
        e1.c[c] = e1.c[c] + delta * p;
    }
    RealField2D n = dot(e1, e1);
    for (int c = 0; c < 3; ++c)
        e1.c[c] = map2(e1.c[c], n, [](double v, double nn) { return v / std::sqrt(nn); });

    VectorField3 e1x(g);
    for (int c = 0; c < 3; ++c) e1x.c[c] = deriv_x(e1.c[c]);
    CurvaturePair out{RealField2D(g), RealField2D(g)};
    out.k = map1(dot(e1x, e1x), [](double v) { return std::sqrt(v); });
    VectorField3 e2(g);
    for (int c = 0; c < 3; ++c)
        e2.c[c] = map2(e1x.c[c], out.k, [](double v, double kk) { return v / kk; });
    VectorField3 e3 = cross(e1, e2);
    VectorField3 e2x(g);
    for (int c = 0; c < 3; ++c) e2x.c[c] = deriv_x(e2.c[c]);
    out.tau = dot(e2x, e3);
    return out;
}

CurvaturePair white_curvature(const Grid2D& g, std::uint64_t seed, double amp, int kmax) {
    BandLimitedOpts o;
    o.kmax = kmax;
    o.amp = amp;
    CurvaturePair out{RealField2D(g), RealField2D(g)};
    // offset by the amplitude so the means are away from zero
    out.k = map1(band_limited(g, seed * 13 + 1, o), [amp](double v) { return v + amp; });
    out.tau = map1(band_limited(g, seed * 13 + 2, o), [amp](double v) { return v + amp; });
    return out;
}

std::vector<double> band_limited_line(const Grid1D& g, std::uint64_t seed, int kmax,
                                      double amp) {
    Rng rng(seed);
    std::vector<cd> F(g.n, cd(0));
    for (int j = 1; j <= kmax; ++j) {
        cd a(rng.normal(), rng.normal());
        F[wrap(j, g.n)] = a;
        F[wrap(-j, g.n)] = std::conj(a);
    }
    fft1(g.n, F.data(), +1);
    std::vector<double> f(g.n);
    double m = 0;
    for (int i = 0; i < g.n; ++i) {
        f[i] = F[i].real();
        m = std::max(m, std::abs(f[i]));
    }
    if (m > 0)
        for (double& v : f) v *= amp / m;
    return f;
}

}  // namespace solgeo
