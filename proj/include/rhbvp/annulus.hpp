#pragma once
// Boundary-value solver on the annulus r < |z| < 1.  The data on the two
// boundary circles is pulled back through the disk covering: the unit circle
// of the covering disk splits into two arcs, theta in (0, pi) lying over the
// inner circle and theta in (pi, 2 pi) over the outer one, with boundary
// correspondence omega(theta) = a ln|cot(theta/2)| mod 2 pi.  The pulled-back
// problem is solved on the disk, and solutions are evaluated per covering
// sheet in the half-plane coordinate, where the chart stays well conditioned
// (the disk chart pinches at w = +-1, the two exceptional nodes where the
// boundary correspondence compactifies infinitely many wraps).

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "boundary.hpp"
#include "covering.hpp"
#include "disk.hpp"
#include "schwarz.hpp"

namespace rhbvp {

struct PullbackPoint {
    bool inner;    // which boundary circle the disk angle lies over
    double omega;  // angle on that circle, in [0, 2 pi)
};

// Boundary correspondence of the covering.  The exceptional nodes theta = 0
// and theta = pi compactify an infinite spiral and carry no single angle.
inline PullbackPoint pullback_angle(const CoveringMap& c, double theta) {
    theta = normalize_angle(theta);
    if (theta == 0.0 || theta == pi)
        throw std::invalid_argument("pullback_angle: exceptional node has no boundary angle");
    const bool inner = theta < pi;
    // ln|cot(theta/2)| = -ln|tan(theta/2)|; the inner arc has cot > 0, the
    // outer arc cot < 0, both collapse under the absolute value.
    const double y = -std::log(std::abs(std::tan(0.5 * theta)));
    return PullbackPoint{inner, normalize_angle(c.a * y)};
}

// Preimages on one arc of a data angle omega_d, kept at least two grid cells
// away from the exceptional nodes (closer preimages exist but cannot be
// resolved on an n-point grid).
inline std::vector<double> jump_preimages(const CoveringMap& c, double omega_d, bool inner,
                                          std::size_t n) {
    const double h = two_pi / double(n);
    const double y_max = -std::log(std::tan(h));
    omega_d = normalize_angle(omega_d);
    std::vector<double> out;
    const long m_lo = (long)std::ceil((-y_max * c.a - omega_d) / two_pi);
    const long m_hi = (long)std::floor((y_max * c.a - omega_d) / two_pi);
    for (long m = m_lo; m <= m_hi; ++m) {
        const double y = (omega_d + two_pi * double(m)) / c.a;
        const double base = 2.0 * std::atan(std::exp(-y));
        out.push_back(inner ? base : two_pi - base);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

// Pull a pair of circle functions back to the covering disk's boundary.
// Exceptional nodes become declared jumps: genuine mean-to-mean jumps for
// real data (phi), zero-size markers for unimodular coefficients (lambda,
// where a mean would not stay unimodular); either way the angles join the
// exclusion set.  Data jumps pull back to every resolvable preimage, with
// left/right swapped on the inner arc where the correspondence reverses
// orientation.
inline BoundaryFunction pull_back_data(const CoveringMap& c, const BoundaryFunction& outer_f,
                                       const BoundaryFunction& inner_f, std::size_t n,
                                       bool unimodular_mode) {
    std::vector<Jump> jumps;
    if (unimodular_mode) {
        const complex v0 = outer_f.value_at(0.0);
        const complex vpi = inner_f.value_at(0.0);
        jumps.push_back(Jump{0.0, v0, v0});
        jumps.push_back(Jump{pi, vpi, vpi});
    } else {
        const complex mean_out = outer_f.mean();
        const complex mean_in = inner_f.mean();
        jumps.push_back(Jump{0.0, mean_out, mean_in});
        jumps.push_back(Jump{pi, mean_in, mean_out});
    }
    for (const auto& j : outer_f.jumps())
        for (double theta : jump_preimages(c, j.angle, false, n))
            jumps.push_back(Jump{theta, j.left, j.right});
    for (const auto& j : inner_f.jumps())
        for (double theta : jump_preimages(c, j.angle, true, n))
            jumps.push_back(Jump{theta, j.right, j.left});  // orientation reversed
    std::sort(jumps.begin(), jumps.end(),
              [](const Jump& a, const Jump& b) { return a.angle < b.angle; });
    std::vector<Jump> dedup;
    for (const auto& j : jumps)
        if (dedup.empty() || j.angle > dedup.back().angle + 1e-12) dedup.push_back(j);

    const double h = two_pi / double(n);
    std::vector<complex> samples(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double theta = double(j) * h;
        if (j == 0 || 2 * j == n) continue;  // set from the node jumps below
        const auto p = pullback_angle(c, theta);
        samples[j] = p.inner ? inner_f.value_at(p.omega) : outer_f.value_at(p.omega);
    }
    for (const auto& j : dedup) {
        const double cells = j.angle / h;
        const double nearest = std::round(cells);
        if (std::abs(cells - nearest) * h < 1e-12) {
            const std::size_t idx = std::size_t(nearest) % n;
            samples[idx] = j.right;  // grid-aligned jumps store the right limit
        }
    }

    BoundaryGenerator gen = [c, outer = outer_f, inner = inner_f](double theta) -> complex {
        theta = normalize_angle(theta);
        if (theta == 0.0) return outer.value_at(0.0);
        if (theta == pi) return inner.value_at(0.0);
        const auto p = pullback_angle(c, theta);
        return p.inner ? inner.value_at(p.omega) : outer.value_at(p.omega);
    };
    return BoundaryFunction(BoundaryCircle::unit(), std::move(samples), std::move(dedup),
                            std::move(gen));
}

// Unit rotation e^{-i angle} with components snapped to exact 0/+-1 when
// within one rounding ulp.  Without the snap, std::polar(1.0, -pi) leaves a
// residual imaginary part ~1e-16 in 1 + e, and on far covering sheets (|zeta|
// below 1e-16) that noise dominates the true numerator of the Moebius
// quotient and flips the logarithm's argument.
inline complex unit_rotation(double angle) {
    const complex e = std::polar(1.0, -angle);
    const auto snap = [](double x) {
        if (std::abs(x) < 2.5e-16) return 0.0;
        if (std::abs(x - 1.0) < 2.5e-16) return 1.0;
        if (std::abs(x + 1.0) < 2.5e-16) return -1.0;
        return x;
    };
    return complex{snap(e.real()), snap(e.imag())};
}

// Evaluate an analytic representation at the half-plane point zeta = T(w),
// writing each closed-form factor as a Moebius quotient so that no precision
// is lost when w approaches +-1 on far covering sheets:
//   1 - w e^{-i theta} = [zeta (1 - e^{-i theta}) + i (1 + e^{-i theta})] / (zeta + i).
// The quotient stays in |q - 1| < 1, so the principal logarithm agrees with
// the disk representation on every sheet.
inline complex rep_value_zeta(const AnalyticRep& rep, complex zeta) {
    const complex iu{0.0, 1.0};
    const complex w = CoveringMap::to_disk(zeta);
    complex v = horner(rep.series(), w);
    for (const auto& t : rep.log_terms()) {
        const complex e = unit_rotation(t.angle);
        const complex q = (zeta * (1.0 - e) + iu * (1.0 + e)) / (zeta + iu);
        v += t.weight * complex{0.0, 2.0} * std::log(q);
    }
    for (const auto& t : rep.pole_terms()) {
        const complex e = unit_rotation(t.angle);
        const complex q = (zeta * (1.0 - e) + iu * (1.0 + e)) / (zeta + iu);
        v += horner(t.num, w) / (q * q);
    }
    return v;
}

}  // namespace detail

struct AnnulusSolution {
    CoveringMap cover;
    DiskSolution disk;  // pulled-back problem and its solution on the covering disk
    BoundaryFunction lambda_outer, phi_outer, lambda_inner, phi_inner;
};

inline AnnulusSolution solve_annulus(double r, const BoundaryFunction& lambda_outer,
                                     const BoundaryFunction& phi_outer,
                                     const BoundaryFunction& lambda_inner,
                                     const BoundaryFunction& phi_inner, std::size_t n = 4096,
                                     const DiskSolveOptions& opt = {}) {
    const CoveringMap c = covering_map(r);
    const BoundaryCircle outer_circle{complex{0.0, 0.0}, 1.0, true};
    const BoundaryCircle inner_circle{complex{0.0, 0.0}, r, false};
    if (!(lambda_outer.circle() == outer_circle) || !(phi_outer.circle() == outer_circle))
        throw std::invalid_argument("solve_annulus: outer data must live on the unit outer circle");
    if (!(lambda_inner.circle() == inner_circle) || !(phi_inner.circle() == inner_circle))
        throw std::invalid_argument(
            "solve_annulus: inner data must live on the inner circle of radius r");
    const BoundaryFunction lam = detail::pull_back_data(c, lambda_outer, lambda_inner, n, true);
    const BoundaryFunction phi = detail::pull_back_data(c, phi_outer, phi_inner, n, false);
    return AnnulusSolution{c, solve_disk(lam, phi, opt), lambda_outer, phi_outer, lambda_inner,
                           phi_inner};
}

// Strip coordinate of the base branch over z: s = (Arg z - i ln|z|)/a, with
// Im s in (0, pi).  Sheet k translates by 2 pi k / a.
inline complex base_strip(const CoveringMap& c, complex z) {
    return complex{std::arg(z), -std::log(std::abs(z))} / c.a;
}

inline complex evaluate_annulus_zeta(const AnnulusSolution& sol, complex zeta) {
    const complex g = detail::rep_value_zeta(sol.disk.g, zeta);
    const complex b = detail::rep_value_zeta(sol.disk.b, zeta);
    return std::exp(complex{0.0, 1.0} * g) * b;
}

inline complex evaluate_annulus(const AnnulusSolution& sol, complex z, long sheet = 0) {
    if (!(std::abs(z) > sol.cover.r && std::abs(z) < 1.0))
        throw std::domain_error("evaluate_annulus: point outside the open annulus");
    const complex s = base_strip(sol.cover, z) +
                      complex{sol.cover.deck_shift() * double(sheet), 0.0};
    if (std::abs(s.real()) > 700.0)
        throw std::range_error("evaluate_annulus: sheet index exceeds representable range");
    return evaluate_annulus_zeta(sol, std::exp(s));
}

// Increment of the solution across one counterclockwise deck step, measured
// at a point on the core circle (purely imaginary for consistent data).
inline complex monodromy(const AnnulusSolution& sol) {
    const complex z{std::sqrt(sol.cover.r), 0.0};
    return evaluate_annulus(sol, z, 1) - evaluate_annulus(sol, z, 0);
}

}  // namespace rhbvp
