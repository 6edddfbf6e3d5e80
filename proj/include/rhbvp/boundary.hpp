#pragma once
// Boundary data on circles: uniformly sampled functions with explicit jump
// descriptors, discrete total variation, closed-form sample generators, and
// the principal-branch argument lift of unimodular coefficient data.
//
// Jump handling is structural throughout the library: a discontinuity is not
// "whatever the samples do" but a declared angle with one-sided limits.  The
// spectral operators subtract closed-form sawtooth terms at the declared
// angles, so mis-declared jumps degrade accuracy from spectral to first
// order.  The built-in generators therefore always populate their full jump
// sets (a two-level step on the circle has TWO transitions).

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fourier.hpp"

namespace rhbvp {

// Map an angle to [0, 2*pi).
inline double normalize_angle(double t) {
    double r = std::fmod(t, two_pi);
    if (r < 0.0) r += two_pi;
    if (r >= two_pi) r = 0.0;
    return r;
}

struct BoundaryCircle {
    complex center{0.0, 0.0};
    double radius{1.0};
    bool outer{true};  // outer boundary component (traversed counterclockwise)

    static BoundaryCircle unit() { return BoundaryCircle{}; }
    friend bool operator==(const BoundaryCircle&, const BoundaryCircle&) = default;
};

// A declared discontinuity: angle plus one-sided limits f(angle-), f(angle+).
struct Jump {
    double angle{0.0};
    complex left{0.0, 0.0};
    complex right{0.0, 0.0};
};

inline complex jump_size(const Jump& j) { return j.right - j.left; }

using BoundaryGenerator = std::function<complex(double)>;

// Uniform samples of a boundary function on a circle.  Sample j sits at
// angle 2*pi*j/n.  At a declared jump angle the stored sample is the
// right-hand limit (generators enforce this; the one exception is the
// argument lift, whose principal range (-pi, pi] forces the left limit +pi
// at a branch crossing -- consumers use the jump descriptor, never the
// at-jump sample, wherever the distinction matters).
class BoundaryFunction {
  public:
    static constexpr std::size_t min_samples = 8;

    BoundaryFunction(BoundaryCircle circle, std::vector<complex> samples,
                     std::vector<Jump> jumps = {}, BoundaryGenerator generator = nullptr)
        : circle_(circle),
          samples_(std::move(samples)),
          jumps_(std::move(jumps)),
          generator_(std::move(generator)) {
        validate();
    }

    const BoundaryCircle& circle() const { return circle_; }
    std::size_t size() const { return samples_.size(); }
    double grid_step() const { return two_pi / static_cast<double>(samples_.size()); }
    double grid_angle(std::size_t j) const { return grid_step() * static_cast<double>(j); }
    const std::vector<complex>& samples() const { return samples_; }
    const std::vector<Jump>& jumps() const { return jumps_; }
    const BoundaryGenerator& generator() const { return generator_; }

    bool is_real(double tol = 1e-12) const {
        for (const auto& s : samples_)
            if (std::abs(s.imag()) > tol) return false;
        return true;
    }

    complex mean() const {
        complex acc{0.0, 0.0};
        for (const auto& s : samples_) acc += s;
        return acc / static_cast<double>(samples_.size());
    }

    // Value at an arbitrary angle: exact closed form when available,
    // otherwise periodic linear interpolation of the samples.  At a declared
    // jump the right-hand limit is returned.
    complex value_at(double theta) const {
        const double t = normalize_angle(theta);
        if (const Jump* j = jump_at(t)) return j->right;
        if (generator_) return generator_(t);
        const double h = grid_step();
        const double pos = t / h;
        const std::size_t j0 = static_cast<std::size_t>(pos) % samples_.size();
        const std::size_t j1 = (j0 + 1) % samples_.size();
        const double frac = pos - std::floor(pos);
        return (1.0 - frac) * samples_[j0] + frac * samples_[j1];
    }

    // Declared jump at this angle, if any (1e-12 angular tolerance).
    const Jump* jump_at(double theta, double tol = 1e-12) const {
        const double t = normalize_angle(theta);
        for (const auto& j : jumps_) {
            double d = std::abs(t - j.angle);
            d = std::min(d, two_pi - d);
            if (d <= tol) return &j;
        }
        return nullptr;
    }

  private:
    void validate() const {
        if (samples_.size() < min_samples || !is_power_of_two(samples_.size()))
            throw std::invalid_argument(
                "BoundaryFunction: sample count must be a power of two, at least 8");
        if (!(circle_.radius > 0.0))
            throw std::invalid_argument("BoundaryFunction: circle radius must be positive");
        double prev = -1.0;
        for (const auto& j : jumps_) {
            if (j.angle < 0.0 || j.angle >= two_pi)
                throw std::invalid_argument("BoundaryFunction: jump angle outside [0, 2*pi)");
            if (j.angle <= prev)
                throw std::invalid_argument(
                    "BoundaryFunction: jump angles must be strictly increasing");
            prev = j.angle;
        }
    }

    BoundaryCircle circle_;
    std::vector<complex> samples_;
    std::vector<Jump> jumps_;  // sorted by angle, strictly increasing
    BoundaryGenerator generator_;
};

// Discrete total variation of the samples over the full circle (wrap
// included).  Declared jumps contribute their sample-to-sample difference
// like any other cell; use the arc overload to measure a single smooth arc.
inline double total_variation(const BoundaryFunction& f) {
    const auto& s = f.samples();
    const std::size_t n = s.size();
    double tv = 0.0;
    for (std::size_t j = 0; j < n; ++j) tv += std::abs(s[(j + 1) % n] - s[j]);
    return tv;
}

// Variation accumulated over grid cells lying fully inside [lo, hi] (angles
// in radians, lo < hi, no wrap).
inline double total_variation(const BoundaryFunction& f, double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("total_variation: need lo < hi");
    const auto& s = f.samples();
    const std::size_t n = s.size();
    const double h = f.grid_step();
    double tv = 0.0;
    for (std::size_t j = 0; j + 1 < n + 1; ++j) {
        const double a = h * static_cast<double>(j);
        const double b = a + h;
        if (a >= lo && b <= hi) tv += std::abs(s[(j + 1) % n] - s[j]);
    }
    return tv;
}

// ---------------------------------------------------------------------------
// Closed-form sample generators.

struct ClosedFormParams {
    // "const"
    complex value{1.0, 0.0};
    // "fourier_mode": amplitude * e^{i k theta}, or its real part
    int k = 1;
    complex amplitude{1.0, 0.0};
    bool real_part = false;
    // "step": a on [0, at), b on [at, 2*pi); jumps at 0 and at
    complex a{1.0, 0.0};
    complex b{-1.0, 0.0};
    double at = pi;
};

// Build uniformly sampled boundary data for a named closed form, with the
// generator retained for exact off-grid evaluation and the full jump set
// declared.  Kinds: "const", "fourier_mode", "step", "sawtooth" (principal
// sawtooth theta on (-pi, pi], the boundary argument of e^{i theta}).
inline BoundaryFunction sample_closed_form(std::string_view kind, const ClosedFormParams& p,
                                           const BoundaryCircle& circle, std::size_t n) {
    if (n < BoundaryFunction::min_samples || !is_power_of_two(n))
        throw std::invalid_argument("sample_closed_form: n must be a power of two, at least 8");

    BoundaryGenerator gen;
    std::vector<Jump> jumps;

    if (kind == "const") {
        const complex v = p.value;
        gen = [v](double) { return v; };
    } else if (kind == "fourier_mode") {
        const int k = p.k;
        const complex amp = p.amplitude;
        const bool re = p.real_part;
        gen = [k, amp, re](double t) {
            const complex v = amp * std::polar(1.0, k * t);
            return re ? complex{v.real(), 0.0} : v;
        };
    } else if (kind == "step") {
        if (!(p.at > 0.0 && p.at < two_pi))
            throw std::invalid_argument("sample_closed_form: step angle must lie in (0, 2*pi)");
        const complex a = p.a, b = p.b;
        const double at = p.at;
        gen = [a, b, at](double t) { return t < at ? a : b; };
        jumps = {Jump{0.0, b, a}, Jump{at, a, b}};
    } else if (kind == "sawtooth") {
        gen = [](double t) { return complex{t <= pi ? t : t - two_pi, 0.0}; };
        jumps = {Jump{pi, complex{pi, 0.0}, complex{-pi, 0.0}}};
    } else {
        throw std::invalid_argument("sample_closed_form: unknown kind '" + std::string(kind) + "'");
    }

    std::vector<complex> samples(n);
    const double h = two_pi / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) samples[j] = gen(h * static_cast<double>(j));
    // right-limit convention at declared grid-aligned jumps (the sawtooth is
    // the documented exception: its value at pi is the left limit +pi, the
    // only representative inside the principal range)
    for (const auto& jmp : jumps) {
        const double pos = jmp.angle / h;
        const double snap = std::round(pos);
        if (std::abs(pos - snap) < 1e-9 && kind != "sawtooth") {
            const std::size_t idx = static_cast<std::size_t>(snap) % n;
            samples[idx] = jmp.right;
        }
    }
    return BoundaryFunction(circle, std::move(samples), std::move(jumps), std::move(gen));
}

// ---------------------------------------------------------------------------
// Argument lift.

// Principal-branch argument data of a unimodular boundary coefficient:
// values in (-pi, pi], declared jumps with exact one-sided limits, and
// per-arc variation diagnostics.  Branch crossings (argument passing through
// +-pi) appear as jumps of size -+2*pi with exact limits {+pi -> -pi} or
// {-pi -> +pi}.
struct ArgumentFunction {
    BoundaryCircle circle;
    std::vector<double> values;  // in (-pi, pi]
    std::vector<Jump> jumps;     // real one-sided limits; sorted by angle
    double variation_excluding_jumps{0.0};
    std::vector<double> arc_variation;  // one entry per smooth arc between jumps

    std::size_t size() const { return values.size(); }

    static bool is_branch_drop(const Jump& j, double tol = 1e-6) {
        return std::abs(jump_size(j).real() + two_pi) <= tol;
    }
    static bool is_branch_rise(const Jump& j, double tol = 1e-6) {
        return std::abs(jump_size(j).real() - two_pi) <= tol;
    }

    // Package as real boundary data for the spectral operators.
    BoundaryFunction as_boundary() const {
        std::vector<complex> s(values.size());
        for (std::size_t j = 0; j < values.size(); ++j) s[j] = complex{values[j], 0.0};
        return BoundaryFunction(circle, std::move(s), jumps);
    }
};

namespace detail {
inline double principal_arg(complex v) {
    double a = std::arg(v);         // (-pi, pi]
    if (a <= -pi) a = pi;           // map the -pi representative to +pi
    return a;
}
}  // namespace detail

// Principal-branch argument lift of unimodular boundary data.
//
// Declared jumps of the input become argument jumps with exact one-sided
// limits Arg(left), Arg(right).  Between declared jumps the sampled argument
// is scanned for branch crossings (consecutive difference beyond pi); the
// crossing angle is located by local inversion (exact when the argument is
// linear in theta, second order otherwise) and recorded with the exact
// limits +-pi.  Throws if any sample is farther than unimodular_tol from the
// unit circle.
inline ArgumentFunction argument_lift(const BoundaryFunction& lam,
                                      double unimodular_tol = 1e-8) {
    const auto& s = lam.samples();
    const std::size_t n = s.size();
    const double h = lam.grid_step();

    ArgumentFunction out;
    out.circle = lam.circle();
    out.values.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (std::abs(std::abs(s[j]) - 1.0) > unimodular_tol)
            throw std::invalid_argument(
                "argument_lift: coefficient data is not unimodular within tolerance");
        out.values[j] = detail::principal_arg(s[j]);
    }

    // declared data jumps -> argument jumps with exact one-sided limits
    std::vector<Jump> jumps;
    for (const auto& j : lam.jumps()) {
        jumps.push_back(Jump{j.angle, complex{detail::principal_arg(j.left), 0.0},
                             complex{detail::principal_arg(j.right), 0.0}});
    }

    auto straddles_declared = [&](double lo, double hi) {
        // does (lo, hi] contain a declared jump angle modulo 2*pi?
        for (const auto& j : jumps) {
            const double d = normalize_angle(j.angle - lo);
            const double len = hi - lo;
            if (d > 0.0 && d <= len + 1e-15) return true;
        }
        return false;
    };

    // branch crossings between consecutive samples
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t j1 = (j + 1) % n;
        const double a0 = out.values[j];
        const double a1 = out.values[j1];
        const double d = a1 - a0;
        if (std::abs(d) <= pi) continue;
        const double lo = h * static_cast<double>(j);
        const double hi = lo + h;
        if (straddles_declared(lo, hi)) continue;  // accounted for by the declared jump
        double theta_star;
        Jump br;
        if (d < 0.0) {
            // descending crossing: argument passes +pi downward
            const double unwrapped = a1 + two_pi;
            theta_star = (unwrapped == a0) ? lo : lo + h * (pi - a0) / (unwrapped - a0);
            br = Jump{normalize_angle(theta_star), complex{pi, 0.0}, complex{-pi, 0.0}};
        } else {
            // ascending crossing: argument passes -pi upward
            const double unwrapped = a1 - two_pi;
            theta_star = (unwrapped == a0) ? lo : lo + h * (-pi - a0) / (unwrapped - a0);
            br = Jump{normalize_angle(theta_star), complex{-pi, 0.0}, complex{pi, 0.0}};
        }
        jumps.push_back(br);
    }

    std::sort(jumps.begin(), jumps.end(),
              [](const Jump& a, const Jump& b) { return a.angle < b.angle; });
    for (std::size_t i = 1; i < jumps.size(); ++i)
        if (jumps[i].angle - jumps[i - 1].angle < 1e-12)
            throw std::runtime_error("argument_lift: coincident jump angles");
    out.jumps = std::move(jumps);

    // variation diagnostics: sum |delta alpha| over cells not touching a jump
    // (a jump exactly at a grid point can place its discontinuity in either
    // adjacent cell depending on which one-sided limit the sample stores, so
    // both neighbors are excluded)
    if (out.jumps.empty()) {
        double tv = 0.0;
        for (std::size_t j = 0; j < n; ++j) tv += std::abs(out.values[(j + 1) % n] - out.values[j]);
        out.variation_excluding_jumps = tv;
        out.arc_variation = {tv};
    } else {
        const std::size_t m = out.jumps.size();
        out.arc_variation.assign(m, 0.0);
        double tv = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double lo = h * static_cast<double>(j);
            bool crossed = false;
            for (const auto& jj : out.jumps) {
                const double d = normalize_angle(jj.angle - lo);
                if (d <= h + 1e-15) { crossed = true; break; }
            }
            if (crossed) continue;
            const double dv = std::abs(out.values[(j + 1) % n] - out.values[j]);
            tv += dv;
            // attribute the cell to the arc whose opening jump precedes lo
            std::size_t arc = m - 1;
            for (std::size_t i = 0; i < m; ++i) {
                if (out.jumps[i].angle <= lo + 1e-15) arc = i;
            }
            out.arc_variation[arc] += dv;
        }
        out.variation_excluding_jumps = tv;
    }
    return out;
}

}  // namespace rhbvp
