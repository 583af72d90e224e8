#ifndef SOLGEO_GRID_HPP
#define SOLGEO_GRID_HPP

#include <cmath>
#include <stdexcept>

#include "solgeo/errors.hpp"

namespace solgeo {

inline constexpr double pi = 3.14159265358979323846264338327950288;

// Doubly periodic rectangle, nx*ny samples, x-fastest storage.
struct Grid2D {
    int nx = 0, ny = 0;
    double lx = 0, ly = 0;

    Grid2D() = default;
    Grid2D(int nx_, int ny_, double lx_, double ly_) : nx(nx_), ny(ny_), lx(lx_), ly(ly_) {
        if (nx < 8 || ny < 8 || nx % 2 || ny % 2)
            throw Error("grid sizes must be even and at least 8");
        if (!(lx > 0) || !(ly > 0)) throw Error("domain lengths must be positive");
    }

    double dx() const { return lx / nx; }
    double dy() const { return ly / ny; }
    double x(int i) const { return lx * i / nx; }
    double y(int j) const { return ly * j / ny; }

    // symmetric integer index: 0..n/2, then negative
    static int fold(int i, int n) { return i <= n / 2 ? i : i - n; }
    double kx(int i) const { return 2 * pi * fold(i, nx) / lx; }
    double ky(int j) const { return 2 * pi * fold(j, ny) / ly; }

    bool operator==(const Grid2D& o) const {
        return nx == o.nx && ny == o.ny && lx == o.lx && ly == o.ly;
    }
    bool operator!=(const Grid2D& o) const { return !(*this == o); }
    std::size_t size() const { return std::size_t(nx) * ny; }
};

struct Grid1D {
    int n = 0;
    double l = 0;
    Grid1D() = default;
    Grid1D(int n_, double l_) : n(n_), l(l_) {
        if (n < 8 || n % 2) throw Error("1d grid size must be even and at least 8");
        if (!(l > 0)) throw Error("domain length must be positive");
    }
    double dx() const { return l / n; }
    double x(int i) const { return l * i / n; }
    double k(int i) const { return 2 * pi * Grid2D::fold(i, n) / l; }
    bool operator==(const Grid1D& o) const { return n == o.n && l == o.l; }
    bool operator!=(const Grid1D& o) const { return !(*this == o); }
};

inline void require_same(const Grid2D& a, const Grid2D& b) {
    if (a != b) throw GridMismatch();
}

}  // namespace solgeo

#endif
