#pragma once
// Deterministic plain-text emission of traces, interior samples, and
// verification reports.  All floating-point values are printed with
// snprintf("%.17g") so repeated runs produce byte-identical files.

#include <cstdio>
#include <ostream>
#include <string>

#include "annulus.hpp"
#include "disk.hpp"
#include "verify.hpp"

namespace rhbvp {

inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
}

// theta, argument lift, conjugate trace, data, weight, and the boundary
// residual measured on the circle of radius r_eval.
inline void write_traces_csv(std::ostream& os, const DiskSolution& sol, double r_eval = 0.999) {
    os << "theta,alpha,beta,phi,weight,residual_at_r\n";
    const std::size_t n = sol.lambda.size();
    for (std::size_t j = 0; j < n; ++j) {
        const double theta = sol.lambda.grid_angle(j);
        const complex z = std::polar(r_eval, theta);
        const double residual =
            std::abs((std::conj(sol.lambda.value_at(theta)) * evaluate_f(sol, z)).real() -
                     sol.phi.value_at(theta).real());
        os << format_double(theta) << ',' << format_double(sol.alpha.values[j]) << ','
           << format_double(sol.beta.samples()[j].real()) << ','
           << format_double(sol.phi.samples()[j].real()) << ','
           << format_double(sol.weight.samples()[j].real()) << ',' << format_double(residual)
           << '\n';
    }
}

// Polar interior grid of f values (nr radii, ntheta angles per circle).
inline void write_interior_csv(std::ostream& os, const DiskSolution& sol, std::size_t nr = 16,
                               std::size_t ntheta = 64) {
    os << "re_z,im_z,re_f,im_f\n";
    for (std::size_t i = 0; i < nr; ++i) {
        const double r = double(i) / double(nr);
        for (std::size_t j = 0; j < ntheta; ++j) {
            const complex z = std::polar(r, two_pi * double(j) / double(ntheta));
            const complex f = evaluate_f(sol, z);
            os << format_double(z.real()) << ',' << format_double(z.imag()) << ','
               << format_double(f.real()) << ',' << format_double(f.imag()) << '\n';
            if (r == 0.0) break;  // one sample suffices at the origin
        }
    }
}

inline void write_residual_csv(std::ostream& os, const ResidualReport& rep) {
    os << "theta,psi,t,residual,converged\n";
    for (const auto& row : rep.rows)
        os << format_double(row.theta) << ',' << format_double(row.psi) << ','
           << format_double(row.t) << ',' << format_double(row.residual) << ','
           << (row.decreasing ? 1 : 0) << '\n';
}

// Annulus values on several branches of the multi-valued solution: a polar
// grid strictly inside r < |z| < 1, one row per (point, sheet).
inline void write_branches_csv(std::ostream& os, const AnnulusSolution& sol, int sheet_min = -1,
                               int sheet_max = 1, std::size_t nr = 8, std::size_t ntheta = 32) {
    os << "re_z,im_z,sheet,re_f,im_f\n";
    const double r = sol.cover.r;
    for (std::size_t i = 0; i < nr; ++i) {
        const double rho = r + (1.0 - r) * (double(i) + 0.5) / double(nr);
        for (std::size_t j = 0; j < ntheta; ++j) {
            const complex z = std::polar(rho, two_pi * double(j) / double(ntheta));
            for (int sheet = sheet_min; sheet <= sheet_max; ++sheet) {
                const complex f = evaluate_annulus(sol, z, sheet);
                os << format_double(z.real()) << ',' << format_double(z.imag()) << ',' << sheet
                   << ',' << format_double(f.real()) << ',' << format_double(f.imag()) << '\n';
            }
        }
    }
}

// The additive constant picked up per counterclockwise loop around the hole,
// measured at |z| = sqrt(r).
inline void write_monodromy_json(std::ostream& os, const AnnulusSolution& sol) {
    const complex m = monodromy(sol);
    os << "{\n"
       << "  \"im\": " << format_double(m.imag()) << ",\n"
       << "  \"probe_radius\": " << format_double(std::sqrt(sol.cover.r)) << ",\n"
       << "  \"re\": " << format_double(m.real()) << "\n"
       << "}\n";
}

inline void write_summary_json(std::ostream& os, const ResidualReport& rep) {
    os << "{\n"
       << "  \"decreasing_fraction\": " << format_double(rep.decreasing_fraction) << ",\n"
       << "  \"excluded\": " << rep.excluded << ",\n"
       << "  \"probes\": " << rep.probes << ",\n"
       << "  \"sup_residual\": " << format_double(rep.sup_final) << "\n"
       << "}\n";
}

}  // namespace rhbvp
