#ifndef SOLGEO_FIELD_HPP
#define SOLGEO_FIELD_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "solgeo/grid.hpp"

namespace solgeo {

using cd = std::complex<double>;

template <class T>
struct Field2D {
    Grid2D grid;
    std::vector<T> v;  // v[ix + nx*iy]

    Field2D() = default;
    explicit Field2D(const Grid2D& g, T fill = T{}) : grid(g), v(g.size(), fill) {}

    T& at(int ix, int iy) { return v[ix + std::size_t(grid.nx) * iy]; }
    const T& at(int ix, int iy) const { return v[ix + std::size_t(grid.nx) * iy]; }

    template <class F>
    static Field2D sample(const Grid2D& g, F&& f) {
        Field2D out(g);
        for (int iy = 0; iy < g.ny; ++iy)
            for (int ix = 0; ix < g.nx; ++ix) out.at(ix, iy) = f(g.x(ix), g.y(iy));
        return out;
    }
};

using RealField2D = Field2D<double>;
using ComplexField2D = Field2D<cd>;

struct VectorField3 {
    std::array<RealField2D, 3> c;
    VectorField3() = default;
    explicit VectorField3(const Grid2D& g) : c{RealField2D(g), RealField2D(g), RealField2D(g)} {}
    const Grid2D& grid() const { return c[0].grid; }
};

// ---- pointwise arithmetic -------------------------------------------------

template <class T, class F>
Field2D<T> map1(const Field2D<T>& a, F&& f) {
    Field2D<T> out(a.grid);
    for (std::size_t i = 0; i < a.v.size(); ++i) out.v[i] = f(a.v[i]);
    return out;
}

template <class T, class U, class F>
auto map2(const Field2D<T>& a, const Field2D<U>& b, F&& f) {
    require_same(a.grid, b.grid);
    Field2D<decltype(f(a.v[0], b.v[0]))> out(a.grid);
    for (std::size_t i = 0; i < a.v.size(); ++i) out.v[i] = f(a.v[i], b.v[i]);
    return out;
}

template <class T>
Field2D<T> operator+(const Field2D<T>& a, const Field2D<T>& b) {
    return map2(a, b, [](T x, T y) { return x + y; });
}
template <class T>
Field2D<T> operator-(const Field2D<T>& a, const Field2D<T>& b) {
    return map2(a, b, [](T x, T y) { return x - y; });
}
template <class T>
Field2D<T> operator*(const Field2D<T>& a, const Field2D<T>& b) {
    return map2(a, b, [](T x, T y) { return x * y; });
}
template <class T, class S>
Field2D<T> operator*(S s, const Field2D<T>& a) {
    return map1(a, [s](T x) { return T(s * x); });
}
template <class T>
Field2D<T> operator-(const Field2D<T>& a) {
    return map1(a, [](T x) { return -x; });
}

inline ComplexField2D complexify(const RealField2D& a) {
    ComplexField2D out(a.grid);
    for (std::size_t i = 0; i < a.v.size(); ++i) out.v[i] = a.v[i];
    return out;
}
inline RealField2D real_part(const ComplexField2D& a) {
    RealField2D out(a.grid);
    for (std::size_t i = 0; i < a.v.size(); ++i) out.v[i] = a.v[i].real();
    return out;
}
inline RealField2D imag_part(const ComplexField2D& a) {
    RealField2D out(a.grid);
    for (std::size_t i = 0; i < a.v.size(); ++i) out.v[i] = a.v[i].imag();
    return out;
}
inline ComplexField2D conj(const ComplexField2D& a) {
    return map1(a, [](cd x) { return std::conj(x); });
}
inline ComplexField2D operator+(const ComplexField2D& a, const RealField2D& b) {
    return map2(a, b, [](cd x, double y) { return x + y; });
}
inline ComplexField2D operator*(const ComplexField2D& a, const RealField2D& b) {
    return map2(a, b, [](cd x, double y) { return x * y; });
}
inline ComplexField2D operator*(const RealField2D& a, const ComplexField2D& b) {
    return map2(a, b, [](double x, cd y) { return x * y; });
}

// ---- vector algebra -------------------------------------------------------

inline VectorField3 operator+(const VectorField3& a, const VectorField3& b) {
    VectorField3 out;
    for (int c = 0; c < 3; ++c) out.c[c] = a.c[c] + b.c[c];
    return out;
}
inline VectorField3 operator-(const VectorField3& a, const VectorField3& b) {
    VectorField3 out;
    for (int c = 0; c < 3; ++c) out.c[c] = a.c[c] - b.c[c];
    return out;
}
inline VectorField3 operator*(double s, const VectorField3& a) {
    VectorField3 out;
    for (int c = 0; c < 3; ++c) out.c[c] = s * a.c[c];
    return out;
}
inline VectorField3 operator*(const RealField2D& s, const VectorField3& a) {
    VectorField3 out;
    for (int c = 0; c < 3; ++c) out.c[c] = s * a.c[c];
    return out;
}
inline RealField2D dot(const VectorField3& a, const VectorField3& b) {
    return a.c[0] * b.c[0] + a.c[1] * b.c[1] + a.c[2] * b.c[2];
}
inline VectorField3 cross(const VectorField3& a, const VectorField3& b) {
    VectorField3 out;
    out.c[0] = a.c[1] * b.c[2] - a.c[2] * b.c[1];
    out.c[1] = a.c[2] * b.c[0] - a.c[0] * b.c[2];
    out.c[2] = a.c[0] * b.c[1] - a.c[1] * b.c[0];
    return out;
}

// ---- norms ----------------------------------------------------------------

template <class T>
double linf_norm(const Field2D<T>& a) {
    double m = 0;
    for (const auto& x : a.v) m = std::max(m, std::abs(x));
    return m;
}
template <class T>
double l2_norm(const Field2D<T>& a) {  // RMS
    double s = 0;
    for (const auto& x : a.v) s += std::norm(cd(x));
    return std::sqrt(s / a.v.size());
}
template <class T>
double integral(const Field2D<T>& a) {  // spectral quadrature: mean * area
    double s = 0;
    for (const auto& x : a.v) s += std::real(cd(x));
    return s / a.v.size() * a.grid.lx * a.grid.ly;
}
template <class T>
bool all_finite(const Field2D<T>& a) {
    for (const auto& x : a.v)
        if (!std::isfinite(std::abs(x))) return false;
    return true;
}

}  // namespace solgeo

#endif
