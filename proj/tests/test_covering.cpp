#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "rhbvp/covering.hpp"

using namespace rhbvp;

TEST_CASE("covering_map validates the inner radius", "[covering]") {
    CHECK_THROWS_AS(covering_map(0.0), std::invalid_argument);
    CHECK_THROWS_AS(covering_map(1.0), std::invalid_argument);
    CHECK_THROWS_AS(covering_map(-0.5), std::invalid_argument);
    CHECK_THROWS_AS(covering_map(1.5), std::invalid_argument);
}

TEST_CASE("frozen values at r = e^{-pi}", "[covering]") {
    const auto c = covering_map(std::exp(-pi));
    CHECK(c.a == Catch::Approx(1.0).margin(1e-15));
    CHECK(c.mu == Catch::Approx(std::exp(-two_pi)).epsilon(1e-15));
    // map(0) = exp(i Log i) = e^{-pi/2}
    const complex g0 = c.map(complex{0.0, 0.0});
    CHECK(g0.real() == Catch::Approx(0.20787957635076191).margin(1e-15));
    CHECK(g0.imag() == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("chart conversions invert each other", "[covering]") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const auto c = covering_map(0.5);
    for (int i = 0; i < 200; ++i) {
        const complex w = std::polar(0.98 * std::sqrt(unif(rng)), two_pi * unif(rng));
        const complex zeta = CoveringMap::to_half_plane(w);
        CHECK(zeta.imag() > 0.0);
        CHECK(std::abs(CoveringMap::to_disk(zeta) - w) < 1e-13);
        const complex s = c.strip_of_disk(w);
        CHECK(s.imag() > 0.0);
        CHECK(s.imag() < pi);
        CHECK(std::abs(CoveringMap::to_disk(std::exp(s)) - w) < 1e-13);
    }
}

TEST_CASE("the covering takes the disk into the annulus", "[covering]") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const auto c = covering_map(0.5);
    for (int i = 0; i < 200; ++i) {
        const complex w = std::polar(0.995 * std::sqrt(unif(rng)), two_pi * unif(rng));
        const complex z = c.map(w);
        CHECK(std::abs(z) > c.r);
        CHECK(std::abs(z) < 1.0);
        // |map| = e^{-a Im s} ties the modulus to the strip height
        const complex s = c.strip_of_disk(w);
        CHECK(std::abs(z) == Catch::Approx(std::exp(-c.a * s.imag())).epsilon(1e-12));
    }
}

TEST_CASE("deck transformations leave the covering invariant", "[covering]") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const auto c = covering_map(0.5);
    for (int i = 0; i < 200; ++i) {
        const complex zeta =
            std::polar(std::exp(6.0 * unif(rng) - 3.0), pi * (0.02 + 0.96 * unif(rng)));
        const complex z = c.map_half_plane(zeta);
        CHECK(std::abs(c.map_half_plane(c.deck_ccw(zeta)) - z) < 1e-12 * std::abs(z) + 1e-13);
        CHECK(std::abs(c.map_half_plane(c.deck_cw(zeta)) - z) < 1e-12 * std::abs(z) + 1e-13);
    }
}

TEST_CASE("derivative matches central differences", "[covering]") {
    const auto c = covering_map(0.5);
    const double h = 1e-6;
    for (complex w : {complex{0.3, 0.1}, complex{-0.2, 0.4}, complex{0.0, -0.5}}) {
        const complex fd_re = (c.map(w + h) - c.map(w - h)) / (2.0 * h);
        const complex fd_im =
            (c.map(w + complex{0.0, h}) - c.map(w - complex{0.0, h})) / (2.0 * h);
        const complex d = c.derivative(w);
        CHECK(std::abs(fd_re - d) < 1e-6 * std::abs(d));
        // Cauchy-Riemann: the imaginary-direction difference is i * derivative
        CHECK(std::abs(fd_im - complex{0.0, 1.0} * d) < 1e-6 * std::abs(d));
    }
}

namespace {
// Closed polyline around the core circle |z| = sqrt(r).
std::vector<complex> core_loop(const CoveringMap& c, std::size_t segments, bool clockwise,
                               std::size_t turns = 1) {
    std::vector<complex> path;
    const double rho = std::sqrt(c.r);
    const double sweep = (clockwise ? -1.0 : 1.0) * two_pi * double(turns);
    for (std::size_t k = 0; k <= segments; ++k)
        path.push_back(std::polar(rho, sweep * double(k) / double(segments)));
    return path;
}
}  // namespace

TEST_CASE("core loops lift to single deck steps", "[covering]") {
    const auto c = covering_map(0.5);
    // s0 = i pi/2 lies over z = e^{-a pi/2} = sqrt(r) on the positive axis.
    const complex s0{0.0, pi / 2.0};
    REQUIRE(std::abs(c.map_strip(s0) - std::sqrt(0.5)) < 1e-15);

    const auto cw = lift_path_strip(c, core_loop(c, 64, true), s0);
    REQUIRE(cw.size() == 65);
    CHECK(std::abs((cw.back() - s0).real() + c.deck_shift()) < 1e-10);
    CHECK(std::abs(cw.back().imag() - pi / 2.0) < 1e-12);
    CHECK(winding_of_lift(c, cw) == Catch::Approx(-1.0).margin(1e-12));

    const auto ccw = lift_path_strip(c, core_loop(c, 64, false), s0);
    CHECK(std::abs((ccw.back() - s0).real() - c.deck_shift()) < 1e-10);
    CHECK(winding_of_lift(c, ccw) == Catch::Approx(1.0).margin(1e-12));

    const auto two = lift_path_strip(c, core_loop(c, 128, false, 2), s0);
    CHECK(winding_of_lift(c, two) == Catch::Approx(2.0).margin(1e-12));
}

TEST_CASE("wide segments are halved along the annulus geodesic", "[covering]") {
    const auto c = covering_map(0.5);
    const complex s0{0.0, pi / 2.0};
    const double rho = std::sqrt(c.r);
    // A single segment sweeping 2.9 radians exceeds the principal-branch
    // comfort zone and must be split internally.
    const std::vector<complex> wide = {std::polar(rho, 0.0), std::polar(rho, 2.9)};
    const auto lift = lift_path_strip(c, wide, s0);
    CHECK(std::abs((lift.back() - s0).real() - 2.9 / c.a) < 1e-12);
    CHECK(std::abs(lift.back().imag() - pi / 2.0) < 1e-13);
    CHECK_THROWS_AS(lift_path_strip(c, wide, s0, 0), std::runtime_error);
}

TEST_CASE("lift_path rejects bad input", "[covering]") {
    const auto c = covering_map(0.5);
    const complex s0{0.0, pi / 2.0};
    CHECK_THROWS_AS(lift_path_strip(c, {}, s0), std::invalid_argument);
    CHECK_THROWS_AS(lift_path_strip(c, {complex{0.3, 0.0}}, s0), std::domain_error);
    CHECK_THROWS_AS(lift_path_strip(c, {complex{1.2, 0.0}}, s0), std::domain_error);
    CHECK_THROWS_AS(lift_path_strip(c, {complex{0.9, 0.0}}, s0), std::invalid_argument);
}

TEST_CASE("disk-chart lift matches the strip lift pointwise", "[covering]") {
    const auto c = covering_map(0.5);
    const double rho = std::sqrt(c.r);
    std::vector<complex> arc;
    for (int k = 0; k <= 16; ++k) arc.push_back(std::polar(rho, 0.8 * double(k) / 16.0));
    const complex w0 = CoveringMap::to_disk(std::exp(complex{0.0, pi / 2.0}));
    const auto wlift = lift_path(c, arc, w0);
    REQUIRE(wlift.size() == arc.size());
    for (std::size_t k = 0; k < wlift.size(); ++k) {
        CHECK(std::abs(wlift[k]) < 1.0);
        CHECK(std::abs(c.map(wlift[k]) - arc[k]) < 1e-11);
    }
}
