#pragma once

// Command-line front end. Every subcommand prints one JSON envelope
// {"command", "inputs", "result", "warnings"} to `out`; diagnostics go to `err`.
// Exit codes: 0 success, 1 input error, 2 analysis not applicable.

#include <CLI11.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "report.hpp"

namespace padyn::cli {

using report::json;

struct Options {
    Prime p = 0;
    std::string a = "0", b, c, x0 = "1";
    int iters = 20;
    int precision = kDefaultPrecision;
    int level = 1;
    int max_level = 4;
    int n = 3;
    int samples = 4;
    bool pretty = false;
};

struct Outcome {
    json inputs = json::object();
    json result = json::object();
    std::vector<std::string> warnings;
    int exit_code = 0;
};

namespace detail {

    inline MobiusMap mobius(const Options& o, json& inputs)
    {
        const Rational a = parse_rational(o.a), b = parse_rational(o.b), c = parse_rational(o.c);
        inputs.update(json{{"prime", o.p}, {"a", to_string(a)}, {"b", to_string(b)}, {"c", to_string(c)}, {"precision", o.precision}});
        return MobiusMap(a, b, c, o.p);
    }

    inline SphereMap sphere(const Options& o, json& inputs)
    {
        const Rational b = parse_rational(o.b), c = parse_rational(o.c);
        inputs.update(json{{"prime", o.p}, {"b", to_string(b)}, {"c", to_string(c)}});
        return SphereMap::validate(b, c, o.p);
    }

    inline Outcome classify(const Options& o)
    {
        Outcome out;
        const MobiusMap m = mobius(o, out.inputs);
        out.result = report::fixed_points(m, fixed_points(m, o.precision));
        return out;
    }

    inline Outcome siegel(const Options& o)
    {
        Outcome out;
        const MobiusMap m = mobius(o, out.inputs);
        const FixedPointAnalysis fp = fixed_points(m, o.precision);
        const SiegelReport r = siegel_analysis(m, fp);
        out.result = report::siegel(r);
        out.result["witnesses"] = json::array();
        if (!r.applicable) {
            out.exit_code = 2;
            return out;
        }
        for (int i : {1, 2}) {
            const SiegelWitness w = siegel_boundary_witness(m, fp, i);
            out.result["witnesses"].push_back(report::siegel_witness(w));
            if (!w.multiplier_weighted_leaves_sphere)
                out.warnings.push_back("x" + std::to_string(i)
                    + ": the candidate f'(x_i)*gamma stays on the boundary sphere; the certificate uses gamma = (p-1)(b x_i + c)/b");
        }
        return out;
    }

    inline Outcome basin(const Options& o)
    {
        Outcome out;
        const MobiusMap m = mobius(o, out.inputs);
        const FixedPointAnalysis fp = fixed_points(m, o.precision);
        const BasinReport r = basin_analysis(m, fp);
        out.result = report::basin(r, fp);
        if (!r.applicable) {
            out.exit_code = 2;
            if (r.failed_condition == BasinCondition::ContractionBound && r.unit_ball_in_basin)
                out.warnings.emplace_back("|b/(b x_1 + c)| = 1: only the open unit ball about x_1 is certified to lie in the basin");
        }
        return out;
    }

    inline Outcome orbit(const Options& o)
    {
        Outcome out;
        const MobiusMap m = mobius(o, out.inputs);
        const Rational x0 = parse_rational(o.x0);
        out.inputs.update(json{{"x0", to_string(x0)}, {"iters", o.iters}});
        const FixedPointAnalysis fp = fixed_points(m, o.precision);
        const OrbitTrace t = iterate(m, fp, ExtScalar::from_rational(x0, m.prime(), o.precision), o.iters);
        out.result = report::orbit(t, fp);
        out.result["target_class"] = std::string(fixed_point_kind_name(fp.kind(t.target_index)));
        if (t.terminated == OrbitTermination::PrecisionExhausted)
            out.warnings.emplace_back("orbit stopped after " + std::to_string(t.points.size())
                + " steps: remaining digits no longer determine the distance to the target; raise --precision");
        return out;
    }

    inline Outcome ergodic(const Options& o)
    {
        Outcome out;
        const SphereMap m = sphere(o, out.inputs);
        out.inputs["max_level"] = o.max_level;
        ErgodicityReport r;
        try {
            r = nonergodicity_witness(m, o.max_level);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::WitnessNotFoundAtLevel)
                throw;
            r.condition = escape_condition(m);
            r.regime = r.condition.holds ? EscapeRegime::ConditionHolds : EscapeRegime::ConditionFails;
            r.levels_searched = o.max_level;
            if (m.prime() == 2)
                r.two_adic_ball = two_adic_ball(m);
            out.warnings.push_back(e.what());
            out.exit_code = 2;
        }
        if (r.two_adic_ball && r.two_adic_ball->covers_sphere)
            out.warnings.emplace_back("the invariant ball of radius 1/2 about 1 is the whole 2-adic unit sphere (normalized measure 1); "
                                      "the witness comes from the residue cycle search");
        out.result = report::ergodicity(r);
        return out;
    }

    inline Outcome cycles(const Options& o)
    {
        Outcome out;
        const SphereMap m = sphere(o, out.inputs);
        out.inputs["level"] = o.level;
        out.result = report::residue_model(residue_model(m, o.level));
        return out;
    }

    inline Outcome audit_iterates(const Options& o)
    {
        Outcome out;
        const SphereMap m = sphere(o, out.inputs);
        out.inputs.update(json{{"N", o.n}, {"samples", o.samples}});
        const IterateAudit a = iterate_formula_audit(m, o.n, o.samples);
        out.result = report::iterate_audit(a);
        out.warnings = a.warnings;
        return out;
    }

    inline Outcome audit_orbit(const Options& o)
    {
        Outcome out;
        const MobiusMap m = mobius(o, out.inputs);
        const Rational x0 = parse_rational(o.x0);
        out.inputs.update(json{{"x0", to_string(x0)}, {"iters", o.iters}});
        const FixedPointAnalysis fp = fixed_points(m, o.precision);
        const OrbitTrace t = iterate(m, fp, ExtScalar::from_rational(x0, m.prime(), o.precision), o.iters);

        std::vector<Rational> exact;
        try {
            exact = oracle::exact_iterate(m.a(), m.b(), m.c(), x0, static_cast<int>(t.points.size()));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::PoleHit && e.code() != ErrorCode::CoefficientBlowup)
                throw;
            out.warnings.push_back(e.what());
        }
        json steps = json::array();
        bool all_agree = true;
        const int w = fp.working_precision;
        const ExtScalar& target = fp.point(t.target_index);
        for (std::size_t k = 0; k + 1 < exact.size(); ++k) {
            const ExtScalar exact_point = ExtScalar::from_rational(exact[k + 1], m.prime(), w);
            const AbsValue exact_distance = ext_norm(exact_point - target);
            const bool point_agrees = (t.points[k] - exact_point).is_indistinguishable_from_zero();
            const bool distance_agrees = exact_distance == t.distances_to_target[k];
            all_agree = all_agree && point_agrees && distance_agrees;
            steps.push_back(json{{"k", k + 1}, {"exact", report::rational(exact[k + 1])}, {"exact_distance", report::abs_value(exact_distance)},
                {"reported_distance", report::abs_value(t.distances_to_target[k])}, {"point_agrees", point_agrees},
                {"distance_agrees", distance_agrees}});
        }
        out.result = json{{"steps", steps}, {"all_agree", all_agree}, {"terminated", std::string(orbit_termination_name(t.terminated))},
            {"target", "x" + std::to_string(t.target_index)}};
        if (!all_agree)
            out.warnings.emplace_back("p-adic orbit disagrees with exact rational composition");
        return out;
    }

    inline bool not_applicable(ErrorCode c)
    {
        return c == ErrorCode::NotApplicable || c == ErrorCode::NoAttractor || c == ErrorCode::WitnessNotFoundAtLevel;
    }

} // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact p-adic dynamics of f(x) = (x + a)/(b x + c)", "padyn"};
    app.require_subcommand(1);
    Options o;

    auto add_prime = [&](CLI::App* s) { s->add_option("-p,--prime", o.p, "prime p")->required(); };
    auto add_format = [&](CLI::App* s) {
        s->add_flag("--json", "compact JSON output (default)");
        s->add_flag("--pretty", o.pretty, "indented JSON output");
    };
    auto add_mobius = [&](CLI::App* s) {
        add_prime(s);
        s->add_option("-a", o.a, "rational a")->capture_default_str();
        s->add_option("-b", o.b, "rational b, nonzero")->required();
        s->add_option("-c", o.c, "rational c != ab")->required();
        s->add_option("--precision", o.precision, "significant p-adic digits")->capture_default_str()->check(CLI::Range(2, 100000));
        add_format(s);
    };
    auto add_sphere = [&](CLI::App* s) {
        add_prime(s);
        s->add_option("-b", o.b, "rational b with |b| < 1")->required();
        s->add_option("-c", o.c, "rational c with |c| = 1")->required();
        add_format(s);
    };
    auto add_orbit = [&](CLI::App* s) {
        s->add_option("--x0", o.x0, "rational starting point")->capture_default_str();
        s->add_option("--iters", o.iters, "maximum number of iterations")->capture_default_str()->check(CLI::Range(0, 1000000));
    };

    struct Command {
        const char* name;
        const char* help;
        Outcome (*handler)(const Options&);
        CLI::App* app = nullptr;
    };
    std::vector<Command> commands{{"classify", "fixed points, multipliers and their classes", detail::classify},
        {"siegel", "maximal Siegel disks and boundary witnesses", detail::siegel},
        {"basin", "basin of the attracting fixed point", detail::basin}, {"orbit", "iterate f from x0", detail::orbit},
        {"ergodic", "non-ergodicity witness on the unit sphere for f(x) = x/(bx + c)", detail::ergodic},
        {"cycles", "cycle decomposition of the residue permutation at one level", detail::cycles},
        {"audit-iterates", "compare closed forms for f^N and f^-N with composition", detail::audit_iterates},
        {"audit-orbit", "compare the p-adic orbit with exact rational iteration", detail::audit_orbit}};
    for (Command& cmd : commands) {
        cmd.app = app.add_subcommand(cmd.name, cmd.help);
        const std::string name = cmd.name;
        if (name == "classify" || name == "siegel" || name == "basin")
            add_mobius(cmd.app);
        else if (name == "orbit" || name == "audit-orbit") {
            add_mobius(cmd.app);
            add_orbit(cmd.app);
        } else {
            add_sphere(cmd.app);
            if (name == "ergodic")
                cmd.app->add_option("--max-level,--level", o.max_level, "deepest residue level searched")->capture_default_str()->check(CLI::Range(1, kMaxResidueLevel));
            else if (name == "cycles")
                cmd.app->add_option("--level,--max-level", o.level, "residue level l")->capture_default_str()->check(CLI::Range(1, kMaxResidueLevel));
            else {
                cmd.app->add_option("-N", o.n, "iterate depth")->capture_default_str()->check(CLI::Range(1, kMaxAuditDepth));
                cmd.app->add_option("--samples", o.samples, "sample points")->capture_default_str()->check(CLI::Range(1, 1000));
            }
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    for (const Command& cmd : commands) {
        if (!cmd.app->parsed())
            continue;
        Outcome result;
        try {
            result = cmd.handler(o);
        } catch (const Error& e) {
            err << "error: " << e.what() << '\n';
            return detail::not_applicable(e.code()) ? 2 : 1;
        }
        const json envelope{{"command", cmd.name}, {"inputs", result.inputs}, {"result", result.result}, {"warnings", result.warnings}};
        out << envelope.dump(o.pretty ? 2 : -1) << '\n';
        for (const std::string& w : result.warnings)
            err << "warning: " << w << '\n';
        return result.exit_code;
    }
    return 1;
}

} // namespace padyn::cli
