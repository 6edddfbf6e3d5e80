#pragma once
// Power-of-two FFT and discrete Fourier helpers used by the spectral operators.
//
// Conventions:
//   * forward transform:  X_k = sum_j x_j e^{-2 pi i jk/n}
//   * dft_coefficients(x) returns X/n, i.e. the trigonometric-interpolant
//     coefficients a_k in "raw" order: index k holds mode k for k < n/2 and
//     mode k-n for k >= n/2.
//   * resample_values(x, m) evaluates the band-limited interpolant of x on a
//     finer uniform grid of m points (the Nyquist bin is split symmetrically,
//     so real data stays real and the interpolant is unchanged).

#include <algorithm>
#include <bit>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace rhbvp {

using complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place radix-2 decimation-in-time FFT. Inverse includes the 1/n factor.
inline void fft(std::vector<complex>& a, bool inverse = false) {
    const std::size_t n = a.size();
    if (!is_power_of_two(n))
        throw std::invalid_argument("fft: length must be a power of two");
    if (n == 1) return;

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? two_pi : -two_pi) / static_cast<double>(len);
        const complex wlen = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            complex w{1.0, 0.0};
            for (std::size_t j = 0; j < len / 2; ++j) {
                const complex u = a[i + j];
                const complex v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        const double inv_n = 1.0 / static_cast<double>(n);
        for (auto& x : a) x *= inv_n;
    }
}

// Interpolant coefficients a_k = (1/n) sum_j x_j e^{-2 pi i jk/n}, raw order.
inline std::vector<complex> dft_coefficients(std::vector<complex> samples) {
    const std::size_t n = samples.size();
    fft(samples);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (auto& c : samples) c *= inv_n;
    return samples;
}

inline std::vector<complex> dft_coefficients(const std::vector<double>& samples) {
    std::vector<complex> buf(samples.begin(), samples.end());
    return dft_coefficients(std::move(buf));
}

// Signed-mode lookup into a raw-order coefficient array (k in (-n/2, n/2]).
inline complex mode(const std::vector<complex>& coeffs, long k) {
    const long n = static_cast<long>(coeffs.size());
    long idx = k % n;
    if (idx < 0) idx += n;
    return coeffs[static_cast<std::size_t>(idx)];
}

// Values of the interpolant with the given raw-order coefficients.
inline std::vector<complex> idft_values(std::vector<complex> coeffs) {
    fft(coeffs, /*inverse=*/true);
    const double n = static_cast<double>(coeffs.size());
    for (auto& x : coeffs) x *= n;  // undo the 1/n of the inverse: values = sum a_k e^{+i...}
    return coeffs;
}

// Band-limited resampling of n samples to m >= n samples (both powers of two).
inline std::vector<complex> resample_values(const std::vector<complex>& samples, std::size_t m) {
    const std::size_t n = samples.size();
    if (m == n) return samples;
    if (!is_power_of_two(n) || !is_power_of_two(m) || m < n)
        throw std::invalid_argument("resample_values: need power-of-two sizes with m >= n");
    std::vector<complex> c = dft_coefficients(samples);
    std::vector<complex> padded(m, complex{0.0, 0.0});
    const std::size_t half = n / 2;
    for (std::size_t k = 0; k < half; ++k) padded[k] = c[k];
    for (std::size_t k = 1; k < half; ++k) padded[m - k] = c[n - k];
    // split the Nyquist bin so real input resamples to real output
    padded[half] = 0.5 * c[half];
    padded[m - half] += 0.5 * c[half];
    return idft_values(std::move(padded));
}

inline std::size_t next_power_of_two(std::size_t n) { return std::bit_ceil(n); }

// Horner evaluation of sum c_k z^k.
inline complex horner(const std::vector<complex>& coeffs, complex z) {
    complex acc{0.0, 0.0};
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
    return acc;
}

}  // namespace rhbvp
