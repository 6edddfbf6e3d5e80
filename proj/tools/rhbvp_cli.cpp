// Command-line front end: solve boundary problems described by a JSON config
// and emit traces, interior samples, residual reports, and monodromy data as
// deterministic plain-text files.
//
// Exit codes: 0 success, 1 error (bad config, bad arguments, I/O failure),
// 2 verification ran but the residual exceeded the requested tolerance.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "rhbvp/config.hpp"
#include "rhbvp/csv.hpp"
#include "rhbvp/verify.hpp"

namespace fs = std::filesystem;
using namespace rhbvp;

namespace {

struct Common {
    std::string config_path;
    std::string output_dir = ".";
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--config", c.config_path, "problem description (JSON)")->required();
    cmd->add_option("--output-dir", c.output_dir, "directory for output files");
}

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return json::parse(in);
}

// Output files must never alias the config the user handed us.
std::ofstream open_output(const Common& c, const std::string& name) {
    fs::create_directories(c.output_dir);
    const fs::path p = fs::path(c.output_dir) / name;
    std::error_code ec;
    if (fs::exists(p, ec) && fs::equivalent(p, fs::path(c.config_path), ec))
        throw std::runtime_error("output file would overwrite the config: " + p.string());
    std::ofstream os(p);
    if (!os) throw std::runtime_error("cannot write " + p.string());
    return os;
}

DiskSolution solve_disk_config(const ProblemConfig& pc) {
    return solve_disk(pc.disk->lambda, pc.disk->phi);
}

AnnulusSolution solve_annulus_config(const ProblemConfig& pc) {
    const AnnulusProblem& a = *pc.annulus;
    return solve_annulus(a.r, a.lambda_outer, a.phi_outer, a.lambda_inner, a.phi_inner, a.n);
}

int run_solve(const Common& c, bool emit_plot_data, bool expect_annulus) {
    const ProblemConfig pc = parse_config(load_config(c.config_path));
    if (pc.is_annulus() != expect_annulus)
        throw std::runtime_error(expect_annulus
                                     ? "solve-annulus: config describes a disk problem"
                                     : "solve-disk: config describes an annulus problem");
    if (pc.is_annulus()) {
        const AnnulusSolution sol = solve_annulus_config(pc);
        {
            auto os = open_output(c, "traces.csv");
            write_traces_csv(os, sol.disk);
        }
        {
            auto os = open_output(c, "monodromy.json");
            write_monodromy_json(os, sol);
        }
        if (emit_plot_data) {
            auto os = open_output(c, "branches.csv");
            write_branches_csv(os, sol);
        }
        const complex m = monodromy(sol);
        std::cout << "annulus r = " << format_double(sol.cover.r) << ", monodromy = ("
                  << format_double(m.real()) << ", " << format_double(m.imag())
                  << "), wrote traces.csv, monodromy.json"
                  << (emit_plot_data ? ", branches.csv" : "") << "\n";
        return 0;
    }
    const DiskSolution sol = solve_disk_config(pc);
    {
        auto os = open_output(c, "traces.csv");
        write_traces_csv(os, sol);
    }
    if (emit_plot_data) {
        auto os = open_output(c, "interior.csv");
        write_interior_csv(os, sol);
    }
    const complex f0 = evaluate_f(sol, complex{0.0, 0.0});
    std::cout << "disk, f(0) = (" << format_double(f0.real()) << ", " << format_double(f0.imag())
              << "), wrote traces.csv" << (emit_plot_data ? ", interior.csv" : "") << "\n";
    return 0;
}

int run_verify(const Common& c, double tolerance, unsigned seed, std::size_t probes) {
    const ProblemConfig pc = parse_config(load_config(c.config_path));
    std::mt19937 rng(seed);
    const double jitter = std::uniform_real_distribution<double>(-0.25, 0.25)(rng);
    const std::vector<double> ladder = radial_ladder(1e-2, 7);  // down to t = 1e-8

    ResidualReport rep;
    if (pc.is_annulus()) {
        const AnnulusSolution sol = solve_annulus_config(pc);
        rep = verify_disk(sol.disk, probes, ladder, -1.0, jitter);
        auto os = open_output(c, "monodromy.json");
        write_monodromy_json(os, sol);
    } else {
        rep = verify_disk(solve_disk_config(pc), probes, ladder, -1.0, jitter);
    }
    {
        auto os = open_output(c, "residuals.csv");
        write_residual_csv(os, rep);
    }
    {
        auto os = open_output(c, "summary.json");
        write_summary_json(os, rep);
    }
    std::cout << "sup residual " << format_double(rep.sup_final) << " over " << rep.probes
              << " probes (" << rep.excluded << " excluded), decreasing fraction "
              << format_double(rep.decreasing_fraction) << "\n";
    if (rep.sup_final > tolerance) {
        std::cout << "tolerance " << format_double(tolerance) << " exceeded\n";
        return 2;
    }
    return 0;
}

int run_family(const Common& c, const std::vector<double>& offsets) {
    const ProblemConfig pc = parse_config(load_config(c.config_path));
    if (pc.is_annulus())
        throw std::runtime_error("family: only disk problems have the one-parameter family");
    const DiskSolution base = solve_disk_config(pc);
    auto os = open_output(c, "family.csv");
    os << "c,re_f0,im_f0,re_fhalf,im_fhalf,sup_residual\n";
    for (double cval : offsets) {
        const DiskSolution member = homogeneous_family(base, cval);
        const complex f0 = evaluate_f(member, complex{0.0, 0.0});
        const complex fh = evaluate_f(member, complex{0.5, 0.0});
        const ResidualReport rep = verify_disk(member, 16);
        os << format_double(cval) << ',' << format_double(f0.real()) << ','
           << format_double(f0.imag()) << ',' << format_double(fh.real()) << ','
           << format_double(fh.imag()) << ',' << format_double(rep.sup_final) << '\n';
    }
    std::cout << "wrote family.csv for " << offsets.size() << " offsets\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boundary-value solver for analytic functions on the disk and annulus"};
    app.require_subcommand(1);

    Common solve_c, verify_c, family_c;
    bool solve_plot = false, annulus_plot = false;
    double tolerance = 1e-3;
    unsigned seed = 12345;
    std::size_t probes = 64;
    std::vector<double> offsets{0.0, 1.0, -1.0};

    CLI::App* sd = app.add_subcommand("solve-disk", "solve a disk problem and write traces");
    add_common(sd, solve_c);
    sd->add_flag("--emit-plot-data", solve_plot, "also write an interior sample grid");

    Common annulus_c;
    CLI::App* sa =
        app.add_subcommand("solve-annulus", "solve an annulus problem and write traces");
    add_common(sa, annulus_c);
    sa->add_flag("--emit-plot-data", annulus_plot, "also write per-branch interior samples");

    CLI::App* vf = app.add_subcommand("verify", "check boundary values along radial ladders");
    add_common(vf, verify_c);
    vf->add_option("--tolerance", tolerance, "largest acceptable final residual");
    vf->add_option("--seed", seed, "seed for the probe-angle jitter");
    vf->add_option("--probes", probes, "number of boundary probe angles");

    CLI::App* fm = app.add_subcommand("family", "evaluate members of the solution family");
    add_common(fm, family_c);
    fm->add_option("--offsets", offsets, "family parameters c, comma separated")
        ->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (sd->parsed()) return run_solve(solve_c, solve_plot, false);
        if (sa->parsed()) return run_solve(annulus_c, annulus_plot, true);
        if (vf->parsed()) return run_verify(verify_c, tolerance, seed, probes);
        return run_family(family_c, offsets);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
