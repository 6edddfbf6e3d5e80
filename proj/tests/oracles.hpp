#pragma once
// Test-side reference computations, independent of the library internals:
// adaptive Simpson quadrature of the exact boundary integral, used to verify
// the spectral Schwarz operator against a second method.

#include <cmath>
#include <complex>
#include <functional>

namespace oracle {

using complex = std::complex<double>;
inline constexpr double pi = 3.14159265358979323846;

namespace detail {
inline complex simpson(double a, double b, complex fa, complex fm, complex fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline complex adapt(const std::function<complex(double)>& f, double a, double b, complex fa,
                     complex fm, complex fb, complex whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const complex flm = f(lm), frm = f(rm);
    const complex left = simpson(a, m, fa, flm, fm);
    const complex right = simpson(m, b, fm, frm, fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace detail

inline complex integrate(const std::function<complex(double)>& f, double a, double b,
                         double tol = 1e-13, int depth = 48) {
    const double m = 0.5 * (a + b);
    const complex fa = f(a), fm = f(m), fb = f(b);
    return detail::adapt(f, a, b, fa, fm, fb, detail::simpson(a, b, fa, fm, fb), tol, depth);
}

// S[u](z) computed directly from the boundary integral, splitting the range
// at the given angles so each panel is smooth.
inline complex schwarz_integral(const std::function<double(double)>& u, complex z,
                                const std::vector<double>& split_at = {}, double tol = 1e-13) {
    auto integrand = [&](double t) {
        const complex e{std::cos(t), std::sin(t)};
        return u(t) * (e + z) / (e - z);
    };
    std::vector<double> knots = {0.0};
    for (double s : split_at)
        if (s > 1e-14 && s < 2.0 * pi - 1e-14) knots.push_back(s);
    knots.push_back(2.0 * pi);
    std::sort(knots.begin(), knots.end());
    complex acc{0.0, 0.0};
    for (std::size_t i = 0; i + 1 < knots.size(); ++i)
        acc += integrate(integrand, knots[i], knots[i + 1], tol);
    return acc / (2.0 * pi);
}

}  // namespace oracle
