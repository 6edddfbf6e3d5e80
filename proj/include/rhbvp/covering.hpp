#pragma once
// Holomorphic covering of the annulus r < |z| < 1 by the unit disk, realized
// through the upper half-plane H and the strip 0 < Im s < pi:
//
//     disk --T--> H --Log--> strip --exp(i a s)--> annulus,   a = -ln r / pi.
//
// Deck transformations act on the strip as real translations s -> s + 2 pi/a
// (one counterclockwise loop around the core circle) and on H as dilations
// zeta -> zeta / mu with mu = e^{-2 pi / a}.  Path lifting and monodromy
// bookkeeping happen in the strip coordinate, which stays uniformly well
// conditioned: the disk chart w = T^{-1}(e^s) pinches at w = +-1 after a
// single loop (1 -+ w ~ 2 mu, below 1e-12 already at r = 0.5), so it is
// exposed for presentation only.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "fourier.hpp"

namespace rhbvp {

struct CoveringMap {
    double r;   // inner radius of the annulus
    double a;   // -ln r / pi; |map| = e^{-a Im s}
    double mu;  // e^{-2 pi / a}; contraction of one clockwise deck step on H

    // Chart conversions (Cayley transform and its inverse).
    static complex to_half_plane(complex w) {
        return complex{0.0, 1.0} * (1.0 + w) / (1.0 - w);
    }
    static complex to_disk(complex zeta) {
        return (zeta - complex{0.0, 1.0}) / (zeta + complex{0.0, 1.0});
    }
    complex strip_of_disk(complex w) const { return std::log(to_half_plane(w)); }

    // The covering in each chart.
    complex map_strip(complex s) const { return std::exp(complex{0.0, a} * s); }
    complex map_half_plane(complex zeta) const { return map_strip(std::log(zeta)); }
    complex map(complex w) const { return map_half_plane(to_half_plane(w)); }
    complex derivative(complex w) const {
        return map(w) * complex{0.0, a} * 2.0 / (1.0 - w * w);
    }

    // Deck action.
    double deck_shift() const { return two_pi / a; }            // strip, ccw loop
    complex deck_ccw(complex zeta) const { return zeta / mu; }  // half-plane
    complex deck_cw(complex zeta) const { return zeta * mu; }
};

inline CoveringMap covering_map(double r) {
    if (!(r > 0.0 && r < 1.0))
        throw std::invalid_argument("covering_map: inner radius must lie in (0, 1)");
    CoveringMap c;
    c.r = r;
    c.a = -std::log(r) / pi;
    c.mu = std::exp(-two_pi / c.a);
    return c;
}

namespace detail {

// Continue the lift across one polyline segment.  When the target/current
// ratio stays away from the principal-log cut the continuation is a single
// exact logarithm step; otherwise the segment is halved along the annulus
// geodesic (geometric mean radius, half the principal angle).
inline complex continue_segment(const CoveringMap& c, complex s_from, complex z_to,
                                std::size_t halvings_left) {
    const complex z_from = c.map_strip(s_from);
    const complex ratio = z_to / z_from;
    if (std::abs(std::arg(ratio)) < 2.8)
        return s_from + std::log(ratio) / complex{0.0, c.a};
    if (halvings_left == 0)
        throw std::runtime_error("lift_path: polyline segment subtends too much angle");
    const complex zm = z_from * std::sqrt(ratio);
    const complex sm = continue_segment(c, s_from, zm, halvings_left - 1);
    return continue_segment(c, sm, z_to, halvings_left - 1);
}

}  // namespace detail

// Lift a polyline in the annulus through the covering, starting from a strip
// point s0 lying over polyline.front().  Winding accumulates in Re s, so a
// closed loop returns with Re s shifted by a whole number of deck steps.
inline std::vector<complex> lift_path_strip(const CoveringMap& c,
                                            const std::vector<complex>& polyline, complex s0,
                                            std::size_t max_halvings = 40) {
    if (polyline.empty()) throw std::invalid_argument("lift_path: empty polyline");
    for (complex z : polyline)
        if (!(std::abs(z) > c.r && std::abs(z) < 1.0))
            throw std::domain_error("lift_path: path leaves the open annulus");
    if (std::abs(c.map_strip(s0) - polyline.front()) > 1e-9)
        throw std::invalid_argument("lift_path: s0 does not lie over the first path point");
    std::vector<complex> lift;
    lift.reserve(polyline.size());
    lift.push_back(s0);
    for (std::size_t k = 1; k < polyline.size(); ++k)
        lift.push_back(detail::continue_segment(c, lift.back(), polyline[k], max_halvings));
    return lift;
}

// Disk-chart presentation of the same lift.
inline std::vector<complex> lift_path(const CoveringMap& c, const std::vector<complex>& polyline,
                                      complex w0, std::size_t max_halvings = 40) {
    const auto strip = lift_path_strip(c, polyline, c.strip_of_disk(w0), max_halvings);
    std::vector<complex> out;
    out.reserve(strip.size());
    for (complex s : strip) out.push_back(CoveringMap::to_disk(std::exp(s)));
    return out;
}

// Net deck displacement of a lifted path, in units of counterclockwise loops.
inline double winding_of_lift(const CoveringMap& c, const std::vector<complex>& strip_lift) {
    if (strip_lift.size() < 2) return 0.0;
    return (strip_lift.back() - strip_lift.front()).real() / c.deck_shift();
}

}  // namespace rhbvp
