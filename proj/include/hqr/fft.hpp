#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hqr {

using Complex = std::complex<double>;

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place radix-2 FFT, forward = sum a_n e^{-2pi i jn/M} (no scaling),
// inverse = (1/M) sum a_n e^{+2pi i jn/M}.
void fft(std::vector<Complex>& a, bool inverse = false);

inline std::vector<Complex> fft_copy(std::vector<Complex> a, bool inverse = false) {
    fft(a, inverse);
    return a;
}

}  // namespace hqr
