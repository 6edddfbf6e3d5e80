#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "rhbvp/csv.hpp"
#include "rhbvp/disk.hpp"
#include "rhbvp/verify.hpp"

using namespace rhbvp;

TEST_CASE("radial ladder is a descending geometric sequence", "[verify]") {
    const auto t = radial_ladder(1e-1, 3);
    REQUIRE(t.size() == 3);
    CHECK(t[0] == Catch::Approx(1e-1));
    CHECK(t[1] == Catch::Approx(1e-2));
    CHECK(t[2] == Catch::Approx(1e-3));
    CHECK_THROWS_AS(radial_ladder(1e-1, 1), std::invalid_argument);
    CHECK_THROWS_AS(radial_ladder(0.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(radial_ladder(1.5, 3), std::invalid_argument);
}

TEST_CASE("Stolz points keep modulus 1 - t and tilt by tan(psi) t", "[verify]") {
    const complex z = stolz_point(1.0, pi / 8.0, 0.01);
    CHECK(std::abs(z) == Catch::Approx(0.99).margin(1e-15));
    CHECK(std::arg(z) == Catch::Approx(1.0 + std::tan(pi / 8.0) * 0.01).margin(1e-15));
    CHECK_THROWS_AS(stolz_point(0.0, pi / 2.0, 0.01), std::invalid_argument);
}

TEST_CASE("midpoint probes avoid grid angles and honor jitter bounds", "[verify]") {
    const auto a = midpoint_probes(16);
    REQUIRE(a.size() == 16);
    CHECK(a[0] == Catch::Approx(pi / 16.0));
    CHECK(a[15] == Catch::Approx(two_pi - pi / 16.0));
    const auto b = midpoint_probes(16, 0.25);
    CHECK(b[0] == Catch::Approx(pi / 16.0 + 0.25 * two_pi / 16.0));
    CHECK_THROWS_AS(midpoint_probes(4), std::invalid_argument);
    CHECK_THROWS_AS(midpoint_probes(16, 0.5), std::invalid_argument);
}

TEST_CASE("harness adds no error of its own for an exact solution", "[verify]") {
    // f(z) = z solves the problem with lambda == 1, phi = cos(theta); the
    // residual along each ray is |(1-t) cos(theta + tan(psi) t) - cos(theta)|.
    const auto lam = sample_closed_form("const", {.value = {1.0, 0.0}}, BoundaryCircle::unit(), 256);
    const auto phi = sample_closed_form("fourier_mode", {.k = 1, .real_part = true},
                                        BoundaryCircle::unit(), 256);

    const auto ladder = radial_ladder(1e-2, 3);
    const auto rep = nontangential_limit_check([](complex z) { return z; }, lam, phi,
                                               midpoint_probes(32), ladder, 1e-3);
    REQUIRE(rep.probes == 32);
    CHECK(rep.excluded == 0);
    CHECK(rep.decreasing_fraction == 1.0);
    for (const auto& row : rep.rows) {
        const double expected = std::abs((1.0 - row.t) * std::cos(row.theta + std::tan(row.psi) * row.t) -
                                         std::cos(row.theta));
        CHECK(row.residual == Catch::Approx(expected).margin(1e-15));
        CHECK(row.decreasing);
    }
    // First-order law: residual ~ t |cos(theta) + tan(psi) sin(theta)|.
    CHECK(rep.sup_final <= 1e-4 * std::sqrt(1.0 + std::pow(std::tan(pi / 8.0), 2)) * 1.01);
    CHECK(rep.sup_final >= 0.5e-4);
}

TEST_CASE("probes near declared jumps or explicit exclusions are dropped", "[verify]") {
    const auto lam = sample_closed_form("const", {.value = {1.0, 0.0}}, BoundaryCircle::unit(), 256);
    const auto phi = sample_closed_form("sawtooth", {}, BoundaryCircle::unit(), 256);  // jump at pi

    const std::vector<double> probe_angles = {0.1, 1.0, pi, 4.0};
    const auto rep =
        nontangential_limit_check([](complex) { return complex{0.0, 0.0}; }, lam, phi,
                                  probe_angles, radial_ladder(1e-2, 2), 0.05, {1.02});
    CHECK(rep.probes == 2);    // 0.1 and 4.0 survive
    CHECK(rep.excluded == 2);  // 1.0 (explicit) and pi (declared jump of phi)
}

TEST_CASE("rays with growing residuals are flagged as non-decreasing", "[verify]") {
    // f(z) = 1/(1 - z) blows up along the ray toward theta = 0.
    const auto lam = sample_closed_form("const", {.value = {1.0, 0.0}}, BoundaryCircle::unit(), 256);
    const auto phi = sample_closed_form("const", {.value = {0.0, 0.0}}, BoundaryCircle::unit(), 256);

    const auto rep = nontangential_limit_check(
        [](complex z) { return 1.0 / (1.0 - z); }, lam, phi, std::vector<double>{0.0},
        radial_ladder(1e-2, 3), 1e-6);
    CHECK(rep.probes == 1);
    CHECK(rep.decreasing_fraction == 0.0);
    CHECK(rep.sup_final > 1e3);
}

TEST_CASE("ladder validation rejects short or non-descending ladders", "[verify]") {
    const auto lam = sample_closed_form("const", {.value = {1.0, 0.0}}, BoundaryCircle::unit(), 256);
    const auto f = [](complex z) { return z; };
    CHECK_THROWS_AS(nontangential_limit_check(f, lam, lam, midpoint_probes(8), {1e-2}, 1e-3),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        nontangential_limit_check(f, lam, lam, midpoint_probes(8), {1e-3, 1e-2}, 1e-3),
        std::invalid_argument);
}

TEST_CASE("verify_disk reproduces the first-order residual law for winding data", "[verify]") {
    // lambda = e^{i theta}, phi == 1 has solution f(z) = z; the residual along
    // the radius is |(1-t) cos(tan(psi) t) - 1| ~ t.
    const auto lam = sample_closed_form("fourier_mode", {.k = 1}, BoundaryCircle::unit(), 4096);
    const auto phi = sample_closed_form("const", {.value = {1.0, 0.0}}, BoundaryCircle::unit(), 4096);
    const auto sol = solve_disk(lam, phi);

    const auto rep = verify_disk(sol);
    CHECK(rep.probes + rep.excluded == 64);
    CHECK(rep.excluded == 0);  // probe midpoints stay clear of the branch angle
    CHECK(rep.decreasing_fraction == 1.0);
    CHECK(rep.sup_final < 2e-4);
    CHECK(rep.sup_final > 0.5e-4);
}

TEST_CASE("csv and summary writers are deterministic", "[verify]") {
    const auto lam = sample_closed_form("fourier_mode", {.k = 1}, BoundaryCircle::unit(), 512);
    const auto phi = sample_closed_form("const", {.value = {1.0, 0.0}}, BoundaryCircle::unit(), 512);
    const auto sol = solve_disk(lam, phi);
    const auto rep = verify_disk(sol, 16);

    std::ostringstream t1, t2, i1, i2, r1, r2, s1, s2;
    write_traces_csv(t1, sol);
    write_traces_csv(t2, sol);
    write_interior_csv(i1, sol, 4, 8);
    write_interior_csv(i2, sol, 4, 8);
    write_residual_csv(r1, rep);
    write_residual_csv(r2, rep);
    write_summary_json(s1, rep);
    write_summary_json(s2, rep);
    CHECK(t1.str() == t2.str());
    CHECK(i1.str() == i2.str());
    CHECK(r1.str() == r2.str());
    CHECK(s1.str() == s2.str());

    CHECK(t1.str().substr(0, t1.str().find('\n')) ==
          "theta,alpha,beta,phi,weight,residual_at_r");
    CHECK(i1.str().substr(0, i1.str().find('\n')) == "re_z,im_z,re_f,im_f");
    CHECK(r1.str().substr(0, r1.str().find('\n')) == "theta,psi,t,residual,converged");
    CHECK(s1.str().find("\"sup_residual\"") != std::string::npos);
    CHECK(s1.str().find("\"probes\": 16") != std::string::npos);
}
