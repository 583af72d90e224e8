#include "solgeo/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

// Plans are cached per (ny, nx, sign) and created FFTW_UNALIGNED so one plan
// serves any buffer; execution itself is thread safe, planning is not.

namespace solgeo {

namespace {

std::mutex plan_mutex;
std::map<std::tuple<int, int, int>, fftw_plan> plans;

fftw_plan get_plan(int nx, int ny, int sign, std::complex<double>* data) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_tuple(ny, nx, sign);
    auto it = plans.find(key);
    if (it != plans.end()) return it->second;
    auto* d = reinterpret_cast<fftw_complex*>(data);
    fftw_plan p;
    if (ny == 0)
        p = fftw_plan_dft_1d(nx, d, d, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    else
        p = fftw_plan_dft_2d(ny, nx, d, d, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans[key] = p;
    return p;
}

}  // namespace

void fft2(int nx, int ny, std::complex<double>* data, int sign) {
    fftw_plan p = get_plan(nx, ny, sign, data);
    auto* d = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(p, d, d);
    if (sign == FFTW_BACKWARD) {
        double s = 1.0 / (double(nx) * ny);
        for (std::size_t i = 0; i < std::size_t(nx) * ny; ++i) data[i] *= s;
    }
}

void fft1(int n, std::complex<double>* data, int sign) {
    fftw_plan p = get_plan(n, 0, sign, data);
    auto* d = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(p, d, d);
    if (sign == FFTW_BACKWARD) {
        double s = 1.0 / n;
        for (int i = 0; i < n; ++i) data[i] *= s;
    }
}

}  // namespace solgeo
