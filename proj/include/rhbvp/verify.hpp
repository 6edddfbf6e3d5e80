#pragma once
// Nontangential boundary verification: approach the circle along Stolz rays
// z(t) = (1 - t) e^{i(theta + tan(psi) t)} over a geometric ladder of t
// values, measure |Re(conj(lambda) f) - phi| at every rung, and report the
// final-rung supremum together with per-ray trend flags.  Probe angles
// within the exclusion radius of a declared jump are dropped (the boundary
// relation is only asserted away from the exceptional set).

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "boundary.hpp"
#include "disk.hpp"

namespace rhbvp {

// Geometric approach ladder base * 10^{-k}, k = 0..rungs-1.
inline std::vector<double> radial_ladder(double base, std::size_t rungs) {
    if (!(base > 0.0 && base < 1.0))
        throw std::invalid_argument("radial_ladder: base must lie in (0, 1)");
    if (rungs < 2)
        throw std::invalid_argument("radial_ladder: need at least two rungs to observe a trend");
    std::vector<double> t(rungs);
    double v = base;
    for (std::size_t k = 0; k < rungs; ++k, v *= 0.1) t[k] = v;
    return t;
}

// Point on the Stolz ray toward e^{i theta} with approach angle psi.
inline complex stolz_point(double theta, double psi, double t) {
    if (!(std::abs(psi) < pi / 2.0))
        throw std::invalid_argument("stolz_point: approach angle must satisfy |psi| < pi/2");
    return std::polar(1.0 - t, theta + std::tan(psi) * t);
}

// Evenly spaced cell-midpoint probe angles, optionally offset by a fraction
// of a cell (jitter in (-0.5, 0.5), used for seeded probe placement).
inline std::vector<double> midpoint_probes(std::size_t count, double jitter = 0.0) {
    if (count < 8) throw std::invalid_argument("midpoint_probes: need at least 8 probes");
    if (!(jitter > -0.5 && jitter < 0.5))
        throw std::invalid_argument("midpoint_probes: jitter must lie in (-0.5, 0.5)");
    std::vector<double> a(count);
    for (std::size_t j = 0; j < count; ++j)
        a[j] = normalize_angle(two_pi * (double(j) + 0.5 + jitter) / double(count));
    return a;
}

struct ProbeRow {
    double theta;
    double psi;
    double t;
    double residual;
    bool decreasing;  // trend flag of this (theta, psi) ray
};

struct ResidualReport {
    std::vector<ProbeRow> rows;
    double sup_final = 0.0;            // sup of last-rung residuals over included rays
    std::size_t probes = 0;            // included probe angles
    std::size_t excluded = 0;          // probe angles inside an exclusion radius
    double decreasing_fraction = 1.0;  // fraction of rays with a non-increasing trend
};

inline double circular_distance(double a, double b) {
    double d = std::abs(normalize_angle(a) - normalize_angle(b));
    return std::min(d, two_pi - d);
}

// Run the ladder check for an arbitrary analytic evaluator.  exclude_angles
// is merged with the declared jump angles of lambda and phi.
inline ResidualReport nontangential_limit_check(
    const std::function<complex(complex)>& f, const BoundaryFunction& lambda,
    const BoundaryFunction& phi, const std::vector<double>& probe_angles,
    const std::vector<double>& ladder, double delta_excl,
    const std::vector<double>& exclude_angles = {},
    const std::vector<double>& psis = {0.0, -pi / 8.0, pi / 8.0}) {
    if (ladder.size() < 2)
        throw std::invalid_argument("nontangential_limit_check: ladder needs two or more rungs");
    for (std::size_t k = 1; k < ladder.size(); ++k)
        if (!(ladder[k] < ladder[k - 1]))
            throw std::invalid_argument("nontangential_limit_check: ladder must descend");

    std::vector<double> excl = exclude_angles;
    for (const auto& j : lambda.jumps()) excl.push_back(j.angle);
    for (const auto& j : phi.jumps()) excl.push_back(j.angle);

    ResidualReport rep;
    std::size_t decreasing_rays = 0, total_rays = 0;
    for (double theta : probe_angles) {
        bool skip = false;
        for (double e : excl)
            if (circular_distance(theta, e) < delta_excl) skip = true;
        if (skip) {
            ++rep.excluded;
            continue;
        }
        ++rep.probes;
        const complex lam_v = lambda.value_at(theta);
        const double phi_v = phi.value_at(theta).real();
        for (double psi : psis) {
            std::vector<double> residuals(ladder.size());
            for (std::size_t k = 0; k < ladder.size(); ++k) {
                const complex z = stolz_point(theta, psi, ladder[k]);
                residuals[k] = std::abs((std::conj(lam_v) * f(z)).real() - phi_v);
            }
            bool dec = true;
            for (std::size_t k = 1; k < residuals.size(); ++k)
                if (residuals[k] > residuals[k - 1] * 1.05 + 1e-15) dec = false;
            ++total_rays;
            if (dec) ++decreasing_rays;
            rep.sup_final = std::max(rep.sup_final, residuals.back());
            for (std::size_t k = 0; k < ladder.size(); ++k)
                rep.rows.push_back(ProbeRow{theta, psi, ladder[k], residuals[k], dec});
        }
    }
    rep.decreasing_fraction =
        (total_rays == 0) ? 1.0 : double(decreasing_rays) / double(total_rays);
    return rep;
}

// Convenience entry point for a disk solution.
inline ResidualReport verify_disk(const DiskSolution& sol, std::size_t probe_count = 64,
                                  std::vector<double> ladder = {}, double delta_excl = -1.0,
                                  double jitter = 0.0) {
    if (ladder.empty()) ladder = radial_ladder(1e-2, 3);
    if (delta_excl < 0.0) delta_excl = 10.0 / double(sol.lambda.size());
    return nontangential_limit_check([&sol](complex z) { return evaluate_f(sol, z); },
                                     sol.lambda, sol.phi, midpoint_probes(probe_count, jitter),
                                     ladder, delta_excl, sol.exclude_angles);
}

}  // namespace rhbvp
