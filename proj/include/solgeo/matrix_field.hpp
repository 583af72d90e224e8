#ifndef SOLGEO_MATRIX_FIELD_HPP
#define SOLGEO_MATRIX_FIELD_HPP

#include <array>

#include "solgeo/field.hpp"
#include "solgeo/spectral.hpp"

namespace solgeo {

// 3x3 matrix of scalar fields (row-major entries)
struct Matrix3Field {
    std::array<RealField2D, 9> e;
    Matrix3Field() = default;
    explicit Matrix3Field(const Grid2D& g) {
        for (auto& f : e) f = RealField2D(g);
    }
    RealField2D& at(int i, int j) { return e[3 * i + j]; }
    const RealField2D& at(int i, int j) const { return e[3 * i + j]; }
    const Grid2D& grid() const { return e[0].grid; }
};

inline Matrix3Field operator+(const Matrix3Field& a, const Matrix3Field& b) {
    Matrix3Field out;
    for (int i = 0; i < 9; ++i) out.e[i] = a.e[i] + b.e[i];
    return out;
}
inline Matrix3Field operator-(const Matrix3Field& a, const Matrix3Field& b) {
    Matrix3Field out;
    for (int i = 0; i < 9; ++i) out.e[i] = a.e[i] - b.e[i];
    return out;
}

inline Matrix3Field matmul(const Matrix3Field& a, const Matrix3Field& b) {
    Matrix3Field out(a.grid());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int s = 0; s < 3; ++s)
                out.at(i, j) = out.at(i, j) + a.at(i, s) * b.at(s, j);
    return out;
}
inline Matrix3Field commutator(const Matrix3Field& a, const Matrix3Field& b) {
    return matmul(a, b) - matmul(b, a);
}
inline Matrix3Field deriv_x(const Matrix3Field& a) {
    Matrix3Field out;
    for (int i = 0; i < 9; ++i) out.e[i] = deriv_x(a.e[i]);
    return out;
}
inline Matrix3Field deriv_y(const Matrix3Field& a) {
    Matrix3Field out;
    for (int i = 0; i < 9; ++i) out.e[i] = deriv_y(a.e[i]);
    return out;
}

// max over the grid of the entrywise Frobenius norm
inline double frobenius_max(const Matrix3Field& a) {
    double m = 0;
    for (std::size_t p = 0; p < a.e[0].v.size(); ++p) {
        double s = 0;
        for (int i = 0; i < 9; ++i) s += a.e[i].v[p] * a.e[i].v[p];
        m = std::max(m, std::sqrt(s));
    }
    return m;
}

// pointwise 2x2 complex matrix, row-major
struct Mat2c {
    std::array<cd, 4> m{};
    cd& operator()(int i, int j) { return m[2 * i + j]; }
    const cd& operator()(int i, int j) const { return m[2 * i + j]; }
};
inline Mat2c operator+(const Mat2c& a, const Mat2c& b) {
    Mat2c o;
    for (int i = 0; i < 4; ++i) o.m[i] = a.m[i] + b.m[i];
    return o;
}
inline Mat2c operator-(const Mat2c& a, const Mat2c& b) {
    Mat2c o;
    for (int i = 0; i < 4; ++i) o.m[i] = a.m[i] - b.m[i];
    return o;
}
inline Mat2c operator*(cd s, const Mat2c& a) {
    Mat2c o;
    for (int i = 0; i < 4; ++i) o.m[i] = s * a.m[i];
    return o;
}
inline Mat2c matmul(const Mat2c& a, const Mat2c& b) {
    Mat2c o;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) o(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return o;
}
inline Mat2c commutator(const Mat2c& a, const Mat2c& b) {
    return matmul(a, b) - matmul(b, a);
}
inline cd trace(const Mat2c& a) { return a(0, 0) + a(1, 1); }

struct SpinMatrixField {
    Grid2D grid;
    std::vector<Mat2c> v;
    SpinMatrixField() = default;
    explicit SpinMatrixField(const Grid2D& g) : grid(g), v(g.size()) {}
    Mat2c& at(int ix, int iy) { return v[ix + std::size_t(grid.nx) * iy]; }
    const Mat2c& at(int ix, int iy) const { return v[ix + std::size_t(grid.nx) * iy]; }
};

}  // namespace solgeo

#endif
