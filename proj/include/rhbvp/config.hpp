#pragma once
// JSON problem descriptions.  A config names a domain (disk, annulus, or a
// general circular layout that must reduce to one of those two) plus boundary
// data per circle, either as a named closed form with parameters or as raw
// samples with optional declared jumps.

#include <json.hpp>

#include <optional>
#include <string>

#include "annulus.hpp"
#include "boundary.hpp"
#include "disk.hpp"

namespace rhbvp {

using json = nlohmann::json;

struct DiskProblem {
    BoundaryFunction lambda;
    BoundaryFunction phi;
    std::size_t n;
};

struct AnnulusProblem {
    double r;
    BoundaryFunction lambda_outer;
    BoundaryFunction phi_outer;
    BoundaryFunction lambda_inner;
    BoundaryFunction phi_inner;
    std::size_t n;
};

struct ProblemConfig {
    std::optional<DiskProblem> disk;
    std::optional<AnnulusProblem> annulus;
    bool is_annulus() const { return annulus.has_value(); }
};

namespace detail {

inline complex parse_complex(const json& j, const std::string& what) {
    if (j.is_number()) return complex{j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return complex{j[0].get<double>(), j[1].get<double>()};
    throw std::invalid_argument("config: " + what + " must be a number or an [re, im] pair");
}

inline BoundaryFunction parse_boundary_data(const json& spec, const BoundaryCircle& circle,
                                            std::size_t n, const std::string& what) {
    if (!spec.is_object() || !spec.contains("kind"))
        throw std::invalid_argument("config: " + what + " must be an object with a \"kind\"");
    const std::string kind = spec.at("kind").get<std::string>();

    if (kind == "samples") {
        const json& raw = spec.at("samples");
        if (!raw.is_array() || raw.size() != n)
            throw std::invalid_argument("config: " + what + ".samples must be an array of length n");
        std::vector<complex> samples;
        samples.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            samples.push_back(parse_complex(raw[i], what + ".samples"));
        std::vector<Jump> jumps;
        for (const json& j : spec.value("jumps", json::array())) {
            Jump jj;
            jj.angle = j.at("angle").get<double>();
            jj.left = parse_complex(j.at("left"), what + ".jumps.left");
            jj.right = parse_complex(j.at("right"), what + ".jumps.right");
            jumps.push_back(jj);
        }
        return BoundaryFunction(circle, std::move(samples), std::move(jumps));
    }

    ClosedFormParams p;
    const json params = spec.value("params", json::object());
    if (params.contains("value")) p.value = parse_complex(params.at("value"), what + ".value");
    if (params.contains("k")) p.k = params.at("k").get<int>();
    if (params.contains("amplitude"))
        p.amplitude = parse_complex(params.at("amplitude"), what + ".amplitude");
    if (params.contains("real_part")) p.real_part = params.at("real_part").get<bool>();
    if (params.contains("a")) p.a = parse_complex(params.at("a"), what + ".a");
    if (params.contains("b")) p.b = parse_complex(params.at("b"), what + ".b");
    if (params.contains("at")) p.at = params.at("at").get<double>();
    return sample_closed_form(kind, p, circle, n);
}

// A "circular" domain is accepted only when its circles form a unit disk or
// a concentric annulus inside the unit circle.
struct CircleSpec {
    BoundaryCircle circle;
    json lambda;
    json phi;
};

inline CircleSpec parse_circle(const json& j, const std::string& what) {
    CircleSpec spec;
    if (j.contains("center"))
        spec.circle.center = parse_complex(j.at("center"), what + ".center");
    if (j.contains("radius")) spec.circle.radius = j.at("radius").get<double>();
    if (j.contains("outer")) spec.circle.outer = j.at("outer").get<bool>();
    if (!j.contains("lambda") || !j.contains("phi"))
        throw std::invalid_argument("config: " + what + " needs lambda and phi data");
    spec.lambda = j.at("lambda");
    spec.phi = j.at("phi");
    return spec;
}

}  // namespace detail

inline ProblemConfig parse_config(const json& cfg) {
    if (!cfg.is_object()) throw std::invalid_argument("config: top level must be an object");
    const json domain = cfg.value("domain", json{{"type", "disk"}});
    if (!domain.is_object() || !domain.contains("type"))
        throw std::invalid_argument("config: domain must be an object with a \"type\"");
    const std::string type = domain.at("type").get<std::string>();
    const std::size_t n = cfg.value("n", std::size_t{4096});
    if (n < BoundaryFunction::min_samples || !is_power_of_two(n))
        throw std::invalid_argument("config: n must be a power of two, at least 8");

    ProblemConfig out;
    if (type == "disk") {
        if (!cfg.contains("lambda") || !cfg.contains("phi"))
            throw std::invalid_argument("config: disk problems need lambda and phi");
        out.disk = DiskProblem{
            detail::parse_boundary_data(cfg.at("lambda"), BoundaryCircle::unit(), n, "lambda"),
            detail::parse_boundary_data(cfg.at("phi"), BoundaryCircle::unit(), n, "phi"), n};
        return out;
    }
    if (type == "annulus") {
        if (!domain.contains("r"))
            throw std::invalid_argument("config: annulus domain needs an inner radius r");
        const double r = domain.at("r").get<double>();
        if (!(r > 0.0 && r < 1.0))
            throw std::invalid_argument("config: annulus radius must lie in (0, 1)");
        if (!cfg.contains("outer") || !cfg.contains("inner"))
            throw std::invalid_argument("config: annulus problems need outer and inner data");
        const json& o = cfg.at("outer");
        const json& i = cfg.at("inner");
        const BoundaryCircle oc{complex{0.0, 0.0}, 1.0, true};
        const BoundaryCircle ic{complex{0.0, 0.0}, r, false};
        out.annulus = AnnulusProblem{
            r,
            detail::parse_boundary_data(o.at("lambda"), oc, n, "outer.lambda"),
            detail::parse_boundary_data(o.at("phi"), oc, n, "outer.phi"),
            detail::parse_boundary_data(i.at("lambda"), ic, n, "inner.lambda"),
            detail::parse_boundary_data(i.at("phi"), ic, n, "inner.phi"),
            n};
        return out;
    }
    if (type == "circular") {
        const json& circles = domain.value("circles", json::array());
        if (!circles.is_array() || circles.empty())
            throw std::invalid_argument("config: circular domain needs a circles array");
        if (circles.size() > 2)
            throw std::invalid_argument(
                "config: circular domains with more than two circles are not supported");
        std::vector<detail::CircleSpec> specs;
        for (std::size_t k = 0; k < circles.size(); ++k)
            specs.push_back(detail::parse_circle(circles[k], "circles[" + std::to_string(k) + "]"));
        if (circles.size() == 1) {
            const auto& s = specs[0];
            if (!(s.circle == BoundaryCircle::unit()))
                throw std::invalid_argument(
                    "config: a single-circle domain must be the unit disk");
            out.disk = DiskProblem{
                detail::parse_boundary_data(s.lambda, s.circle, n, "circles[0].lambda"),
                detail::parse_boundary_data(s.phi, s.circle, n, "circles[0].phi"), n};
            return out;
        }
        const bool first_outer = specs[0].circle.outer;
        const auto& os = first_outer ? specs[0] : specs[1];
        const auto& is = first_outer ? specs[1] : specs[0];
        const double r = is.circle.radius;
        if (!(os.circle == BoundaryCircle::unit()) || is.circle.outer ||
            std::abs(is.circle.center) != 0.0 || !(r > 0.0 && r < 1.0))
            throw std::invalid_argument(
                "config: two-circle domains must be a concentric annulus inside the unit circle");
        out.annulus = AnnulusProblem{r,
                                     detail::parse_boundary_data(os.lambda, os.circle, n, "outer"),
                                     detail::parse_boundary_data(os.phi, os.circle, n, "outer"),
                                     detail::parse_boundary_data(is.lambda, is.circle, n, "inner"),
                                     detail::parse_boundary_data(is.phi, is.circle, n, "inner"),
                                     n};
        return out;
    }
    throw std::invalid_argument("config: unknown domain type \"" + type + "\"");
}

}  // namespace rhbvp
