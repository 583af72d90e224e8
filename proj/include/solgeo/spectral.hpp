#ifndef SOLGEO_SPECTRAL_HPP
#define SOLGEO_SPECTRAL_HPP

#include <vector>

#include "solgeo/fft.hpp"
#include "solgeo/field.hpp"

namespace solgeo {

// All operators are Fourier-diagonal on the periodic grid.  Odd-order
// derivatives (and the z/zbar pair, and every inversion) zero both Nyquist
// lines so that composition identities hold on the resolved subspace and no
// spurious imaginary parts appear; even-order derivatives keep the full band.

ComplexField2D to_spectral(const ComplexField2D& f);
ComplexField2D to_physical(const ComplexField2D& fhat);

// out_hat(kx,ky) = sym(kx,ky) * f_hat(kx,ky)
template <class F>
ComplexField2D apply_symbol(const ComplexField2D& f, F&& sym, bool kill_nyquist) {
    const Grid2D& g = f.grid;
    ComplexField2D out = to_spectral(f);
    for (int iy = 0; iy < g.ny; ++iy) {
        bool ny_nyq = (iy == g.ny / 2);
        for (int ix = 0; ix < g.nx; ++ix) {
            bool nyq = ny_nyq || (ix == g.nx / 2);
            cd& c = out.at(ix, iy);
            c = (kill_nyquist && nyq) ? cd(0) : c * sym(g.kx(ix), g.ky(iy));
        }
    }
    return to_physical(out);
}

ComplexField2D deriv_x(const ComplexField2D& f);
ComplexField2D deriv_y(const ComplexField2D& f);
ComplexField2D deriv_xx(const ComplexField2D& f);
ComplexField2D deriv_yy(const ComplexField2D& f);
ComplexField2D deriv_xy(const ComplexField2D& f);
ComplexField2D deriv_xxx(const ComplexField2D& f);
ComplexField2D deriv_yyy(const ComplexField2D& f);
RealField2D deriv_x(const RealField2D& f);
RealField2D deriv_y(const RealField2D& f);
RealField2D deriv_xx(const RealField2D& f);
RealField2D deriv_yy(const RealField2D& f);
RealField2D deriv_xy(const RealField2D& f);
RealField2D deriv_xxx(const RealField2D& f);
RealField2D deriv_yyy(const RealField2D& f);

// d/dz = (d/dx - i d/dy)/2 and its conjugate
ComplexField2D deriv_z(const ComplexField2D& f);
ComplexField2D deriv_zbar(const ComplexField2D& f);
ComplexField2D deriv_z(const RealField2D& f);
ComplexField2D deriv_zbar(const RealField2D& f);
ComplexField2D deriv_z3(const ComplexField2D& f);
ComplexField2D deriv_zbar3(const ComplexField2D& f);

// zero-x-mean antiderivative; the killed per-line mean comes back as a diagnostic
struct Antideriv {
    RealField2D value;
    std::vector<double> discarded_mean;  // one entry per y line
    double discarded_linf = 0;
};
struct AntiderivC {
    ComplexField2D value;
    std::vector<cd> discarded_mean;
    double discarded_linf = 0;
};
Antideriv antideriv_x(const RealField2D& f);
Antideriv antideriv_y(const RealField2D& f);
AntiderivC antideriv_x(const ComplexField2D& f);
AntiderivC antideriv_y(const ComplexField2D& f);

// convenience: antiderivative value only
inline RealField2D adx(const RealField2D& f) { return antideriv_x(f).value; }
inline RealField2D ady(const RealField2D& f) { return antideriv_y(f).value; }
inline ComplexField2D adx(const ComplexField2D& f) { return antideriv_x(f).value; }
inline ComplexField2D ady(const ComplexField2D& f) { return antideriv_y(f).value; }

// solve dV/dzbar = g; throws NonSolvableConstraint if g carries mean content
ComplexField2D invert_dzbar(const ComplexField2D& g, double rel_tol = 1e-10);

// solve a_yy u_yy + a_xx u_xx = rhs; null modes of the symbol must carry no rhs
struct PoissonResult {
    RealField2D u;
    double null_content = 0;  // rhs magnitude on zeroed modes (relative)
};
PoissonResult invert_poisson_like(double a_yy, double a_xx, const RealField2D& rhs,
                                  double rel_tol = 1e-10);

// solve w_xx = rhs with all x-mean modes zeroed
struct DxxResult {
    RealField2D w;
    double discarded = 0;  // linf of the killed x-mean content
};
DxxResult invert_dxx(const RealField2D& rhs);

RealField2D dealias23(const RealField2D& f);
ComplexField2D dealias23(const ComplexField2D& f);

std::vector<double> xmean(const RealField2D& f);  // one mean per y line
std::vector<double> ymean(const RealField2D& f);
RealField2D xmean_field(const RealField2D& f);
RealField2D zero_xmean(const RealField2D& f);

// ---- 1D lines -------------------------------------------------------------

std::vector<double> deriv_line(const Grid1D& g, const std::vector<double>& f);
struct AntiderivLine {
    std::vector<double> value;
    double discarded_mean = 0;
};
AntiderivLine antideriv_line(const Grid1D& g, const std::vector<double>& f);

}  // namespace solgeo

#endif
