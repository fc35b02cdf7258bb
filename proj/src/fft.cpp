#include "hqr/fft.hpp"

#include <cmath>
#include <numbers>

namespace hqr {

void fft(std::vector<Complex>& a, bool inverse) {
    const std::size_t n = a.size();
    if (!is_power_of_two(n)) throw std::invalid_argument("fft: size must be a power of two");

    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
        const Complex wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            Complex w(1.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                Complex u = a[i + j];
                Complex t = a[i + j + len / 2] * w;
                a[i + j] = u + t;
                a[i + j + len / 2] = u - t;
                w *= wlen;
            }
        }
    }

    if (inverse) {
        const double scale = 1.0 / static_cast<double>(n);
        for (auto& x : a) x *= scale;
    }
}

}  // namespace hqr
