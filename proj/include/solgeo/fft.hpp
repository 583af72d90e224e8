#ifndef SOLGEO_FFT_HPP
#define SOLGEO_FFT_HPP

#include <complex>

namespace solgeo {

// In-place complex-to-complex transforms; backward is normalized by 1/N.
// Layout for 2D: x-fastest, i.e. dims (ny, nx) in row-major terms.
void fft2(int nx, int ny, std::complex<double>* data, int sign);  // sign -1 fwd, +1 inv
void fft1(int n, std::complex<double>* data, int sign);

}  // namespace solgeo

#endif
