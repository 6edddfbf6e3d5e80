#pragma once
// Solver for the boundary-coefficient problem on the unit disk: given a
// unimodular coefficient lambda and real data phi on the circle, construct
// an analytic f with
//
//   Re( conj(lambda(theta)) * f(z) ) -> phi(theta)   as z -> e^{i theta}
//
// nontangentially, away from finitely many declared angles.  The pipeline:
//
//   alpha  = principal argument lift of lambda
//   g      = S[alpha]                 (Schwarz integral)
//   A      = exp(i g)                 (zero-free; |A| = e^{-Im g})
//   beta   = conjugate trace of alpha (boundary values of Im g)
//   weight = phi * e^{beta}
//   B      = S[weight]
//   f      = A * B
//
// so that Re(conj(lambda) f) = e^{-beta} Re(conj(e^{i alpha}) A B)|boundary
// collapses back to phi.  The solution is unique only up to the homogeneous
// family f + i c A, c real.
//
// Singular weights.  When alpha has a branch-cut jump of size -2pi at
// theta_0 (the hallmark of winding coefficient data such as e^{i theta}),
// e^{beta} carries the non-integrable factor p(x) = 1/(4 sin^2(x/2)) at
// theta_0, whose formal Fourier coefficients are -|q|/2.  The weight's
// completion is then assembled symbolically: writing the smooth prefactor's
// interpolant coefficients T_m, the completion coefficients are the
// convolution d_n = 2 sum_m T_m p_{n-m} e^{-i(n-m)theta_0} (n >= 1), which
// beyond the prefactor bandwidth K collapse to (a n + b) e^{-i n theta_0}
// with a = -pre(theta_0), b = -i pre'(theta_0); that tail sums to a closed
// rational form with a double pole at e^{i theta_0}.  The result is exact
// for trigonometric-polynomial prefactors -- sampling the weight itself
// would lose everything (its at-singularity sample is ~e^{2 ln n}).

#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include "boundary.hpp"
#include "fourier.hpp"
#include "schwarz.hpp"

namespace rhbvp {

struct DiskSolveOptions {
    std::size_t modes = 0;             // retained Taylor modes; 0 -> n/2
    double beta_overflow_limit = 700.0;  // exp() overflow guard on the trace
    double branch_tol = 1e-9;          // detection of a -2pi branch jump
};

struct DiskSolution {
    BoundaryFunction lambda;
    BoundaryFunction phi;
    ArgumentFunction alpha;
    AnalyticRep g;           // S[alpha]
    BoundaryFunction beta;   // conjugate trace of alpha
    BoundaryFunction weight; // phi * e^beta samples (diagnostic near singular angles)
    AnalyticRep b;           // completion of the weight
    std::vector<double> exclude_angles;  // angles exempt from boundary verification
    bool singular_completion = false;    // b was built by the symbolic route
    double family_offset = 0.0;          // c in f = A (B + i c)
};

inline complex evaluate_A(const DiskSolution& s, complex z) {
    return std::exp(complex{0.0, 1.0} * s.g.evaluate(z));
}

inline complex evaluate_f(const DiskSolution& s, complex z) {
    return evaluate_A(s, z) * s.b.evaluate(z);
}

// Member of the homogeneous family f + i c A (equivalently B + i c).
inline DiskSolution homogeneous_family(const DiskSolution& base, double c) {
    DiskSolution out = base;
    const double delta = c - base.family_offset;
    out.b.series()[0] += complex{0.0, delta};
    out.family_offset = c;
    return out;
}

namespace detail {

// Symbolic completion of phi * e^beta when beta = smooth - 2 ln|2 sin(.)|:
// returns the analytic rep of S[weight] built from the smooth prefactor.
inline AnalyticRep singular_weight_completion(const std::vector<double>& prefactor,
                                              double theta0) {
    const std::size_t n = prefactor.size();
    const long half = static_cast<long>(n) / 2;

    std::vector<complex> pre_c(n);
    for (std::size_t j = 0; j < n; ++j) pre_c[j] = complex{prefactor[j], 0.0};
    const std::vector<complex> T = dft_coefficients(pre_c);

    // effective bandwidth of the prefactor (Nyquist dropped)
    double t_max = 0.0;
    for (long m = -(half - 1); m <= half - 1; ++m) t_max = std::max(t_max, std::abs(mode(T, m)));
    const double thresh = t_max * 1e-13;
    long K = 1;
    for (long m = half - 1; m >= 1; --m) {
        if (std::abs(mode(T, m)) > thresh || std::abs(mode(T, -m)) > thresh) {
            K = m;
            break;
        }
    }

    const complex rot = std::polar(1.0, -theta0);
    auto ptilde = [&](long q) -> complex {
        // formal coefficients of 1/(4 sin^2((x)/2)) at angle theta0: -|q|/2
        if (q == 0) return complex{0.0, 0.0};
        return -0.5 * std::abs(double(q)) * std::polar(1.0, -double(q) * theta0);
    };

    // head: d_0 = W_0, d_n = 2 W_n for n = 1..K
    std::vector<complex> head(static_cast<std::size_t>(K) + 1, complex{0.0, 0.0});
    for (long nn = 0; nn <= K; ++nn) {
        complex w{0.0, 0.0};
        for (long m = -K; m <= K; ++m) w += mode(T, m) * ptilde(nn - m);
        head[static_cast<std::size_t>(nn)] = (nn == 0) ? w : 2.0 * w;
    }

    // tail coefficients (a n + b) e^{-i n theta0} for n > K, summed exactly
    complex P{0.0, 0.0}, Q{0.0, 0.0};
    for (long m = -K; m <= K; ++m) {
        const complex e = std::polar(1.0, double(m) * theta0);
        P += mode(T, m) * e;
        Q += double(m) * mode(T, m) * e;
    }
    const complex a = -P;
    const complex b = Q;

    // num(omega) = a omega^{K+1}((K+1) - K omega) + b (omega^{K+1} - omega^{K+2}),
    // expressed in z via omega = z e^{-i theta0}
    std::vector<complex> num(static_cast<std::size_t>(K) + 3, complex{0.0, 0.0});
    const complex rK1 = std::pow(rot, static_cast<double>(K + 1));
    const complex rK2 = rK1 * rot;
    num[static_cast<std::size_t>(K) + 1] = (a * double(K + 1) + b) * rK1;
    num[static_cast<std::size_t>(K) + 2] = -(a * double(K) + b) * rK2;

    return AnalyticRep(std::move(head), {}, {PoleTerm{theta0, std::move(num)}});
}

}  // namespace detail

inline DiskSolution solve_disk(const BoundaryFunction& lambda, const BoundaryFunction& phi,
                               const DiskSolveOptions& opt = {}) {
    if (lambda.size() != phi.size())
        throw std::invalid_argument("solve_disk: coefficient and data grids differ in size");
    if (!(lambda.circle() == phi.circle()))
        throw std::invalid_argument("solve_disk: coefficient and data live on different circles");
    if (!(lambda.circle() == BoundaryCircle::unit()))
        throw std::invalid_argument("solve_disk: boundary must be the unit circle");
    if (!phi.is_real(1e-9))
        throw std::invalid_argument("solve_disk: Dirichlet data must be real");

    const std::size_t n = lambda.size();
    const double h = two_pi / static_cast<double>(n);

    ArgumentFunction alpha = argument_lift(lambda);
    const BoundaryFunction alpha_bf = alpha.as_boundary();

    AnalyticRep g = schwarz_spectral(alpha_bf, opt.modes);

    // conjugate trace: smooth remainder through the multiplier, singular
    // sawtooth parts in closed form (shared decomposition with the solver)
    JumpDecomposition dec = split_jumps(alpha_bf);
    const std::vector<complex> rem_conj = hilbert_multiplier(dec.remainder);

    std::vector<complex> beta_samples(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double th = alpha_bf.grid_angle(j);
        double singular = 0.0;
        for (std::size_t q = 0; q < dec.angles.size(); ++q)
            singular += dec.weights[q].real() * sawtooth_conjugate(th - dec.angles[q], 0.5 * h);
        beta_samples[j] = complex{rem_conj[j].real() + singular, 0.0};
    }

    // overflow guard, skipping the regularized samples at singular angles
    for (std::size_t j = 0; j < n; ++j) {
        const double th = alpha_bf.grid_angle(j);
        bool at_singular = false;
        for (std::size_t q = 0; q < dec.angles.size(); ++q) {
            double dd = std::abs(normalize_angle(th - dec.angles[q]));
            dd = std::min(dd, two_pi - dd);
            if (dd < h && std::abs(dec.weights[q]) > 1e-15) at_singular = true;
        }
        if (!at_singular && std::abs(beta_samples[j].real()) > opt.beta_overflow_limit)
            throw std::overflow_error(
                "solve_disk: conjugate trace exceeds the exponential overflow guard");
    }

    std::vector<Jump> beta_markers;
    for (std::size_t q = 0; q < dec.angles.size(); ++q) {
        if (std::abs(dec.weights[q]) < 1e-15) continue;
        const std::size_t idx =
            static_cast<std::size_t>(std::llround(dec.angles[q] / h)) % n;
        beta_markers.push_back(Jump{dec.angles[q], beta_samples[idx], beta_samples[idx]});
    }
    std::sort(beta_markers.begin(), beta_markers.end(),
              [](const Jump& x, const Jump& y) { return x.angle < y.angle; });
    BoundaryFunction beta(lambda.circle(), beta_samples, beta_markers);

    // weight samples and jump set
    std::vector<complex> weight_samples(n);
    for (std::size_t j = 0; j < n; ++j)
        weight_samples[j] =
            complex{phi.samples()[j].real() * std::exp(beta_samples[j].real()), 0.0};

    std::vector<Jump> weight_jumps;
    for (const auto& pj : phi.jumps()) {
        const double bv = beta.value_at(pj.angle).real();
        weight_jumps.push_back(
            Jump{pj.angle, pj.left * std::exp(bv), pj.right * std::exp(bv)});
    }
    for (const auto& bm : beta.jumps()) {
        bool merged = false;
        for (const auto& w : weight_jumps)
            if (std::abs(w.angle - bm.angle) < 1e-12) merged = true;
        if (!merged) {
            const std::size_t idx = static_cast<std::size_t>(std::llround(bm.angle / h)) % n;
            weight_jumps.push_back(Jump{bm.angle, weight_samples[idx], weight_samples[idx]});
        }
    }
    std::sort(weight_jumps.begin(), weight_jumps.end(),
              [](const Jump& x, const Jump& y) { return x.angle < y.angle; });
    BoundaryFunction weight(lambda.circle(), weight_samples, weight_jumps);

    // completion of the weight
    bool singular_route = false;
    if (alpha.jumps.size() == 1 && phi.jumps().empty() &&
        std::abs(jump_size(alpha.jumps[0]).real() + two_pi) <= opt.branch_tol)
        singular_route = true;

    AnalyticRep b;
    if (singular_route) {
        const double theta0 = alpha.jumps[0].angle;
        std::vector<double> prefactor(n);
        for (std::size_t j = 0; j < n; ++j)
            prefactor[j] = phi.samples()[j].real() * std::exp(rem_conj[j].real());
        b = detail::singular_weight_completion(prefactor, theta0);
        // keep the jump-blind series of the sampled weight for diagnostics
        const std::vector<complex> raw = dft_coefficients(weight.samples());
        const std::size_t m = (opt.modes == 0) ? n / 2 : opt.modes;
        std::vector<complex> plain(m);
        plain[0] = raw[0];
        for (std::size_t k2 = 1; k2 < m; ++k2) plain[k2] = 2.0 * raw[k2];
        b.set_plain_series(std::move(plain));
        b.set_source(std::make_shared<BoundaryFunction>(weight));
    } else {
        b = schwarz_spectral(weight, opt.modes);
    }

    std::vector<double> excludes;
    for (const auto& j : alpha.jumps) excludes.push_back(j.angle);
    for (const auto& j : phi.jumps()) {
        bool dup = false;
        for (double e : excludes)
            if (std::abs(e - j.angle) < 1e-12) dup = true;
        if (!dup) excludes.push_back(j.angle);
    }
    std::sort(excludes.begin(), excludes.end());

    return DiskSolution{lambda,          phi,   alpha, std::move(g), std::move(beta),
                        std::move(weight), std::move(b), std::move(excludes), singular_route,
                        0.0};
}

}  // namespace rhbvp
