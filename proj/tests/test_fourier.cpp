#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <rhbvp/fourier.hpp>

using namespace rhbvp;

namespace {
// Quadratic-cost reference transform for validating the FFT.
std::vector<complex> naive_dft(const std::vector<complex>& x) {
    const std::size_t n = x.size();
    std::vector<complex> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        complex acc{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j)
            acc += x[j] * std::polar(1.0, -two_pi * double(j) * double(k) / double(n));
        out[k] = acc;
    }
    return out;
}
}  // namespace

TEST_CASE("fft matches the quadratic-cost reference transform", "[fourier]") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<complex> x(64);
    for (auto& v : x) v = complex{u(rng), u(rng)};

    auto ref = naive_dft(x);
    auto got = x;
    fft(got);
    for (std::size_t k = 0; k < x.size(); ++k)
        REQUIRE(std::abs(got[k] - ref[k]) < 1e-11);
}

TEST_CASE("fft inverse round-trips", "[fourier]") {
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<complex> x(256);
    for (auto& v : x) v = complex{u(rng), u(rng)};

    auto y = x;
    fft(y);
    fft(y, /*inverse=*/true);
    for (std::size_t j = 0; j < x.size(); ++j)
        REQUIRE(std::abs(y[j] - x[j]) < 1e-12);
}

TEST_CASE("fft rejects non power-of-two lengths", "[fourier]") {
    std::vector<complex> x(24, complex{1.0, 0.0});
    REQUIRE_THROWS_AS(fft(x), std::invalid_argument);
}

TEST_CASE("dft_coefficients recovers cosine mode amplitudes", "[fourier]") {
    const std::size_t n = 128;
    std::vector<double> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = std::cos(3.0 * two_pi * double(j) / double(n));
    auto c = dft_coefficients(x);
    REQUIRE(std::abs(mode(c, 3) - complex{0.5, 0.0}) < 1e-14);
    REQUIRE(std::abs(mode(c, -3) - complex{0.5, 0.0}) < 1e-14);
    for (long k = -63; k <= 64; ++k) {
        if (k == 3 || k == -3) continue;
        REQUIRE(std::abs(mode(c, k)) < 1e-14);
    }
}

TEST_CASE("band-limited resampling reproduces trigonometric values", "[fourier]") {
    const std::size_t n = 32, m = 256;
    std::vector<complex> x(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double t = two_pi * double(j) / double(n);
        x[j] = complex{std::cos(5.0 * t) + 0.25 * std::sin(2.0 * t), 0.0};
    }
    auto y = resample_values(x, m);
    for (std::size_t j = 0; j < m; ++j) {
        const double t = two_pi * double(j) / double(m);
        const double want = std::cos(5.0 * t) + 0.25 * std::sin(2.0 * t);
        REQUIRE(std::abs(y[j] - complex{want, 0.0}) < 1e-12);
        REQUIRE(std::abs(y[j].imag()) < 1e-13);  // real data stays real
    }
}

TEST_CASE("horner evaluates a known polynomial", "[fourier]") {
    std::vector<complex> c = {{1.0, 0.0}, {-2.0, 0.0}, {0.0, 3.0}};
    const complex z{0.5, -0.25};
    const complex want = c[0] + c[1] * z + c[2] * z * z;
    REQUIRE(std::abs(horner(c, z) - want) < 1e-15);
}
