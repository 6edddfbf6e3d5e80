#pragma once
// The Schwarz integral operator on the unit disk and its boundary companions:
//
//   S[u](z) = (1/2pi) \int u(t) (e^{it} + z)/(e^{it} - z) dt,
//
// the analytic function with Re S[u] -> u on the boundary and Im S[u](0) = 0,
// together with the conjugate boundary trace (boundary values of Im S[u]).
//
// Representation.  Plain truncated Fourier series of sampled data lose four
// to five orders of accuracy the moment the data has a jump (the coefficient
// error of a sampled sawtooth is pi/n).  Every discontinuity is therefore
// carried structurally: data with declared jumps is split as
//
//   u = smooth remainder + sum_j c_j * saw(theta - theta_j),
//       c_j = (u(theta_j+) - u(theta_j-)) / 2pi,
//
// where saw(x) = pi - x on (0, 2pi) is the zero-mean sawtooth with jump
// +2pi at 0.  The remainder is handled spectrally; each sawtooth term has
// the closed forms
//
//   S[saw(. - theta_0)](z) = 2i Log(1 - z e^{-i theta_0}),
//   conjugate trace        = 2 ln|2 sin((theta - theta_0)/2)|.
//
// An AnalyticRep is a Taylor series plus such logarithmic terms plus
// second-order pole terms (produced by the singular-weight completion in the
// disk solver).  The untreated full-sample series is retained alongside for
// cross-checks against quadrature of the same trigonometric interpolant.

#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include "boundary.hpp"
#include "fourier.hpp"

namespace rhbvp {

// Zero-mean sawtooth with jump +2pi at 0: saw(x) = pi - x on (0, 2pi),
// right-continuous at the jump (saw(0) = pi).
inline double sawtooth(double x) {
    const double t = normalize_angle(x);
    return pi - t;
}

// Conjugate boundary trace of the sawtooth: 2 ln|2 sin(x/2)|, with the
// logarithmic singularity at x = 0 regularized at half a grid cell.
inline double sawtooth_conjugate(double x, double half_cell) {
    double t = normalize_angle(x);
    if (t > pi) t = two_pi - t;  // symmetric
    if (t < half_cell) t = half_cell;
    return 2.0 * std::log(2.0 * std::sin(0.5 * t));
}

// c * 2i Log(1 - z e^{-i theta0}); Re on the boundary is c * saw(theta - theta0).
struct LogTerm {
    double angle{0.0};
    complex weight{0.0, 0.0};
};

// num(z) / (1 - z e^{-i theta0})^2, the closed-form tail of a singular-weight
// completion.
struct PoleTerm {
    double angle{0.0};
    std::vector<complex> num;
};

namespace detail {

inline complex one_minus_rotated(complex z, double angle) {
    return complex{1.0, 0.0} - z * std::polar(1.0, -angle);
}

inline complex log_term_value(const LogTerm& t, complex z) {
    // 1 - z e^{-i a} has positive real part for |z| < 1, so the principal
    // branch is smooth on the whole disk
    return t.weight * complex{0.0, 2.0} * std::log(one_minus_rotated(z, t.angle));
}

inline complex pole_term_value(const PoleTerm& t, complex z) {
    const complex d = one_minus_rotated(z, t.angle);
    return horner(t.num, z) / (d * d);
}

}  // namespace detail

// Jump decomposition of sampled boundary data: limit-consistent smooth
// remainder plus sawtooth multiples at the declared jump angles.
struct JumpDecomposition {
    std::vector<complex> remainder;  // n values, smooth across the former jumps
    std::vector<double> angles;
    std::vector<complex> weights;  // c_j = jump_size / 2pi
};

inline JumpDecomposition split_jumps(const BoundaryFunction& u) {
    const auto& s = u.samples();
    const std::size_t n = s.size();
    JumpDecomposition d;
    d.remainder.resize(n);
    for (const auto& j : u.jumps()) {
        d.angles.push_back(j.angle);
        d.weights.push_back(jump_size(j) / two_pi);
    }
    for (std::size_t j = 0; j < n; ++j) {
        const double th = u.grid_angle(j);
        // at a declared jump the right-hand limit is the value consistent
        // with saw's right-continuity, regardless of what the sample stores
        complex v = s[j];
        if (const Jump* jm = u.jump_at(th)) v = jm->right;
        for (std::size_t m = 0; m < d.angles.size(); ++m)
            v -= d.weights[m] * sawtooth(th - d.angles[m]);
        d.remainder[j] = v;
    }
    return d;
}

// Analytic function on the unit disk: Taylor series + logarithmic terms +
// second-order pole terms.  Also carries the plain (jump-blind) series of
// the source samples for interpolant-level cross-checks, and the smooth
// remainder samples for near-boundary quadrature delegation.
class AnalyticRep {
  public:
    AnalyticRep() = default;
    AnalyticRep(std::vector<complex> series, std::vector<LogTerm> logs,
                std::vector<PoleTerm> poles)
        : series_(std::move(series)), logs_(std::move(logs)), poles_(std::move(poles)) {}

    const std::vector<complex>& series() const { return series_; }
    std::vector<complex>& series() { return series_; }
    const std::vector<LogTerm>& log_terms() const { return logs_; }
    const std::vector<PoleTerm>& pole_terms() const { return poles_; }
    const std::vector<complex>& plain_series() const { return plain_; }
    void set_plain_series(std::vector<complex> p) { plain_ = std::move(p); }
    void set_truncated(bool t) { truncated_ = t; }
    void set_remainder(std::shared_ptr<const BoundaryFunction> r) { remainder_ = std::move(r); }
    void set_source(std::shared_ptr<const BoundaryFunction> s) { source_ = std::move(s); }
    const std::shared_ptr<const BoundaryFunction>& source() const { return source_; }

    complex value_at_zero() const {
        complex v = series_.empty() ? complex{0.0, 0.0} : series_[0];
        for (const auto& p : poles_)
            if (!p.num.empty()) v += p.num[0];
        return v;  // log terms vanish at 0
    }

    // Evaluate at |z| < 1.  The closed-form terms are exact everywhere; the
    // series part switches to quadrature of the smooth remainder interpolant
    // once truncation would start to bite (|z| > 0.99).
    complex operator()(complex z) const { return evaluate(z); }
    complex evaluate(complex z) const;

    // The jump-blind evaluator: plain truncated series of the raw samples.
    complex evaluate_plain(complex z) const {
        if (std::abs(z) >= 1.0)
            throw std::domain_error("AnalyticRep: evaluation point outside the open disk");
        return horner(plain_, z);
    }

  private:
    std::vector<complex> series_;
    std::vector<LogTerm> logs_;
    std::vector<PoleTerm> poles_;
    std::vector<complex> plain_;
    bool truncated_ = false;  // series kept fewer modes than the data carries
    std::shared_ptr<const BoundaryFunction> remainder_;
    std::shared_ptr<const BoundaryFunction> source_;
};

// Direct quadrature evaluation of S[u] at one point: the trapezoid rule on a
// band-limited resampling of u, refined until the kernel is resolved.
// Throws std::domain_error for |z| >= 1 and std::range_error when z is too
// close to the boundary to resolve (1 - |z| < resolvable).
inline complex schwarz_quadrature(const BoundaryFunction& u, complex z,
                                  double resolvable = 1e-6) {
    const double r = std::abs(z);
    if (r >= 1.0)
        throw std::domain_error("schwarz_quadrature: evaluation point outside the open disk");
    if (1.0 - r < resolvable)
        throw std::range_error(
            "schwarz_quadrature: point too close to the boundary for the requested grid");

    const std::size_t wanted =
        static_cast<std::size_t>(std::min<double>(16.0 / (1.0 - r), 1.0 * (1u << 24)));
    std::size_t m = std::max(u.size(), next_power_of_two(std::max<std::size_t>(wanted, 8)));
    m = std::min<std::size_t>(m, 1u << 24);

    const std::vector<complex> vals =
        (m == u.size()) ? u.samples() : resample_values(u.samples(), m);
    complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < m; ++j) {
        const complex e = std::polar(1.0, two_pi * double(j) / double(m));
        acc += vals[j] * (e + z) / (e - z);
    }
    return acc / static_cast<double>(m);
}

inline complex AnalyticRep::evaluate(complex z) const {
    if (std::abs(z) >= 1.0)
        throw std::domain_error("AnalyticRep: evaluation point outside the open disk");
    // A complete series (all n/2 interpolant modes) is a finite polynomial
    // and exact at every interior point.  Only a deliberately truncated
    // series profits from quadrature of the smooth remainder near the
    // boundary -- and only while the kernel is still resolvable under the
    // refinement cap.
    complex v{0.0, 0.0};
    const double r = std::abs(z);
    if (truncated_ && remainder_ && r > 0.99 && 1.0 - r >= 2e-6)
        v = schwarz_quadrature(*remainder_, z, 1e-12);
    else
        v = horner(series_, z);
    for (const auto& t : logs_) v += detail::log_term_value(t, z);
    for (const auto& t : poles_) v += detail::pole_term_value(t, z);
    return v;
}

// Spectral construction of S[u] with structural jump handling.  m is the
// number of retained Taylor modes (1 <= m <= n/2); the series coefficients
// follow the cosine convention c_0 = a_0, c_k = 2 a_k.
inline AnalyticRep schwarz_spectral(const BoundaryFunction& u, std::size_t m = 0) {
    const std::size_t n = u.size();
    if (m == 0) m = n / 2;
    if (m < 1 || m > n / 2)
        throw std::invalid_argument("schwarz_spectral: need 1 <= m <= n/2 retained modes");

    JumpDecomposition d = split_jumps(u);
    const std::vector<complex> rem_coeff = dft_coefficients(d.remainder);

    std::vector<complex> series(m);
    series[0] = rem_coeff[0];
    for (std::size_t k = 1; k < m; ++k) series[k] = 2.0 * rem_coeff[k];

    std::vector<LogTerm> logs;
    for (std::size_t j = 0; j < d.angles.size(); ++j)
        if (std::abs(d.weights[j]) > 1e-15) logs.push_back(LogTerm{d.angles[j], d.weights[j]});

    AnalyticRep rep(std::move(series), std::move(logs), {});
    rep.set_truncated(m < n / 2);

    const std::vector<complex> raw_coeff = dft_coefficients(u.samples());
    std::vector<complex> plain(m);
    plain[0] = raw_coeff[0];
    for (std::size_t k = 1; k < m; ++k) plain[k] = 2.0 * raw_coeff[k];
    rep.set_plain_series(std::move(plain));

    rep.set_remainder(std::make_shared<BoundaryFunction>(u.circle(), std::move(d.remainder)));
    rep.set_source(std::make_shared<BoundaryFunction>(u));
    return rep;
}

// Discrete conjugation multiplier -i sgn(k) applied to sampled values
// (mean and Nyquist bins dropped); real input produces real output.
inline std::vector<complex> hilbert_multiplier(std::vector<complex> values) {
    const std::size_t n = values.size();
    fft(values);
    const long nl = static_cast<long>(n);
    for (long k = 0; k < nl; ++k) {
        const long signed_k = (k <= nl / 2) ? k : k - nl;
        if (signed_k == 0 || signed_k == nl / 2)
            values[static_cast<std::size_t>(k)] = complex{0.0, 0.0};
        else
            values[static_cast<std::size_t>(k)] *= complex{0.0, signed_k > 0 ? -1.0 : 1.0};
    }
    fft(values, /*inverse=*/true);
    return values;
}

// Conjugate boundary trace: the boundary values of Im S[u], i.e. the
// periodic Hilbert transform companion normalized to mean zero.  The smooth
// remainder goes through the spectral multiplier -i sgn(k) (Nyquist bin
// dropped); each sawtooth term contributes its closed-form conjugate.  The
// returned data declares a marker jump at each logarithmic singularity.
inline BoundaryFunction conjugate_boundary(const BoundaryFunction& u) {
    const std::size_t n = u.size();
    const double h = u.grid_step();

    JumpDecomposition d = split_jumps(u);
    const std::vector<complex> spec = hilbert_multiplier(d.remainder);

    std::vector<complex> beta(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double th = u.grid_angle(j);
        double singular = 0.0;
        for (std::size_t q = 0; q < d.angles.size(); ++q)
            singular += d.weights[q].real() * sawtooth_conjugate(th - d.angles[q], 0.5 * h);
        beta[j] = complex{spec[j].real() + singular, 0.0};
    }

    std::vector<Jump> markers;
    for (std::size_t q = 0; q < d.angles.size(); ++q) {
        if (std::abs(d.weights[q]) < 1e-15) continue;
        const double a = d.angles[q];
        // marker: the trace is unbounded here, not a two-sided step; both
        // limits record the regularized sample value
        const double pos = a / h;
        const std::size_t idx = static_cast<std::size_t>(std::llround(pos)) % n;
        markers.push_back(Jump{a, beta[idx], beta[idx]});
    }
    std::sort(markers.begin(), markers.end(),
              [](const Jump& x, const Jump& y) { return x.angle < y.angle; });
    return BoundaryFunction(u.circle(), std::move(beta), std::move(markers));
}

// Largest gap between the plain series evaluator and direct quadrature of
// the same trigonometric interpolant over the given points.
inline double cross_check(const AnalyticRep& rep, const std::vector<complex>& pts) {
    if (!rep.source()) throw std::logic_error("cross_check: representation has no source data");
    double worst = 0.0;
    for (const complex& z : pts) {
        const double gap = std::abs(rep.evaluate_plain(z) - schwarz_quadrature(*rep.source(), z));
        worst = std::max(worst, gap);
    }
    return worst;
}

}  // namespace rhbvp
