#pragma once

// JSON renderings of analysis results. nlohmann::json objects keep keys
// sorted, so dumps are byte-stable.

#include <json.hpp>

#include "ergodic.hpp"
#include "mobius.hpp"

namespace padyn::report {

using json = nlohmann::json;

inline json rational(const Rational& q) { return to_string(q); }

inline json abs_value(const AbsValue& v)
{
    return json{{"base", v.base()}, {"exponent", v.is_zero() ? json(nullptr) : json(v.exponent_string())}};
}

inline json square_class(const SquareClass& s)
{
    return json{{"tag", std::string(square_tag_name(s.tag))}, {"representative", s.representative}};
}

inline json ext_scalar(const ExtScalar& x, const std::optional<Rational>& exact = std::nullopt)
{
    json j{{"display", x.to_string()}, {"u", x.u().to_string()}, {"w", x.w().to_string()}, {"d", x.d()}, {"norm", abs_value(ext_norm(x))}};
    if (exact)
        j["exact"] = rational(*exact);
    return j;
}

inline json fixed_points(const MobiusMap& map, const FixedPointAnalysis& fp)
{
    json points = json::array();
    for (int i : {1, 2}) {
        points.push_back(json{{"label", "x" + std::to_string(i)}, {"value", ext_scalar(fp.point(i), fp.exact(i))},
            {"multiplier", ext_scalar(fp.multiplier(i))}, {"multiplier_norm", abs_value(ext_norm(fp.multiplier(i)))},
            {"class", std::string(fixed_point_kind_name(fp.kind(i)))}});
    }
    const ExtScalar product = fp.lambda1 * fp.lambda2 - ExtScalar::from_rational(1, map.prime(), fp.working_precision);
    return json{{"fixed_points", points}, {"discriminant", rational(map.discriminant())},
        {"discriminant_class", square_class(fp.discriminant_class)}, {"pole", rational(map.pole())},
        {"multiplier_product_is_one", product.is_zero_to(fp.precision)}, {"precision", fp.precision},
        {"working_precision", fp.working_precision}};
}

inline json siegel(const SiegelReport& r)
{
    return json{{"applicable", r.applicable},
        {"failed_condition", r.failed_condition ? json(std::string(siegel_condition_name(*r.failed_condition))) : json(nullptr)},
        {"multiplier_norm", abs_value(r.multiplier_norm)}, {"radius_ratio", abs_value(r.radius_ratio)},
        {"max_radius", abs_value(r.max_radius)}, {"fixed_point_distance", abs_value(r.fixed_point_distance)},
        {"relation", std::string(disk_relation_name(r.relation))}, {"x2_in_disk_of_x1", r.x2_in_disk_of_x1}};
}

inline json siegel_witness(const SiegelWitness& w)
{
    return json{{"fixed_point", "x" + std::to_string(w.which)}, {"gamma", ext_scalar(w.gamma)}, {"point", ext_scalar(w.point)},
        {"distance", abs_value(w.distance)}, {"image_distance", abs_value(w.image_distance)}, {"leaves_sphere", w.leaves_sphere},
        {"multiplier_weighted_candidate",
            json{{"gamma", ext_scalar(w.multiplier_weighted_gamma)}, {"image_distance", abs_value(w.multiplier_weighted_image_distance)},
                {"leaves_sphere", w.multiplier_weighted_leaves_sphere}}}};
}

inline json basin(const BasinReport& r, const FixedPointAnalysis& fp)
{
    return json{{"applicable", r.applicable},
        {"failed_condition", r.failed_condition ? json(std::string(basin_condition_name(*r.failed_condition))) : json(nullptr)},
        {"attractor", ext_scalar(r.attractor, fp.exact(r.attractor_index))}, {"attractor_label", "x" + std::to_string(r.attractor_index)},
        {"excluded", json{{"pole", rational(r.pole)}, {"repeller", ext_scalar(r.repeller, fp.exact(3 - r.attractor_index))}}},
        {"multiplier_norm", abs_value(r.multiplier_norm)}, {"contraction_ratio", abs_value(r.contraction_ratio)},
        {"delta1_scale", abs_value(r.delta1_scale)}, {"delta2_scale", abs_value(r.delta2_scale)},
        {"critical_sphere_radius", abs_value(r.critical_sphere_radius)}, {"pole_to_repeller", abs_value(r.pole_to_repeller)},
        {"unit_ball_in_basin", r.unit_ball_in_basin}, {"excluded_on_critical_sphere", r.excluded_on_critical_sphere}};
}

inline json orbit(const OrbitTrace& t, const FixedPointAnalysis& fp)
{
    json points = json::array(), distances = json::array();
    for (const ExtScalar& x : t.points)
        points.push_back(ext_scalar(x));
    for (const AbsValue& d : t.distances_to_target)
        distances.push_back(abs_value(d));
    return json{{"points", points}, {"distances_to_target", distances}, {"terminated", std::string(orbit_termination_name(t.terminated))},
        {"target", "x" + std::to_string(t.target_index)}, {"target_value", ext_scalar(fp.point(t.target_index), fp.exact(t.target_index))},
        {"convergence_threshold", abs_value(t.convergence_threshold)}, {"steps", t.points.size()}};
}

inline json coefficients(const IterateCoefficients& k)
{
    return json{{"slope", rational(k.slope)}, {"constant", rational(k.constant)}, {"source", std::string(formula_source_name(k.source))}};
}

inline json iterate_audit(const IterateAudit& a)
{
    json checks = json::array();
    for (const FormulaCheck& c : a.checks) {
        auto opt = [](const std::optional<Rational>& q) { return q ? rational(*q) : json(nullptr); };
        checks.push_back(json{{"label", c.label}, {"N", c.n}, {"formula", coefficients(c.formula)}, {"composed", coefficients(c.composed)},
            {"outcome", std::string(audit_outcome_name(c.outcome))},
            {"first_mismatch", c.first_mismatch ? json(*c.first_mismatch) : json(nullptr)}, {"counterexample", opt(c.counterexample)},
            {"formula_value", opt(c.formula_value)}, {"composed_value", opt(c.composed_value)}});
    }
    json samples = json::array();
    for (const Rational& x : a.sample_points)
        samples.push_back(rational(x));
    return json{{"N", a.n}, {"samples", samples}, {"checks", checks}, {"inverse_undoes_forward", a.inverse_undoes_forward}};
}

inline json residue_model(const ResidueMapModel& m)
{
    json table = json::object();
    for (const auto& [x, y] : m.table)
        table[std::to_string(x)] = y;
    json measures = json::array();
    for (const Rational& q : m.measures)
        measures.push_back(rational(q));
    return json{{"prime", m.prime}, {"level", m.level}, {"modulus", m.modulus}, {"table", table}, {"cycles", m.cycles}, {"measures", measures}};
}

inline json ergodicity(const ErgodicityReport& r)
{
    json j{{"escape_condition_holds", r.condition.holds}, {"leading_digit", r.condition.leading_digit},
        {"multiplicative_order", r.condition.order}, {"regime", std::string(escape_regime_name(r.regime))},
        {"route", "ORBIT_CLOSURE"}, {"levels_searched", r.levels_searched}, {"verdict", r.verdict}, {"witness", nullptr},
        {"two_adic_ball", nullptr}};
    if (r.witness)
        j["witness"] = json{{"N", r.witness->cycle_length}, {"level", r.witness->level}, {"invariant_set", r.witness->invariant_set},
            {"measure", rational(r.witness->measure)}};
    if (r.two_adic_ball) {
        const TwoAdicBall& b = *r.two_adic_ball;
        j["two_adic_ball"] = json{{"center", rational(b.center)}, {"radius", abs_value(b.radius)}, {"invariant", b.invariant},
            {"unnormalized_measure", rational(b.unnormalized_measure)}, {"normalized_measure", rational(b.normalized_measure)},
            {"covers_sphere", b.covers_sphere}};
    }
    return j;
}

} // namespace padyn::report
