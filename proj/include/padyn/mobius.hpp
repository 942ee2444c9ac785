#pragma once

// Dynamics of f(x) = (x + a)/(b x + c) over Q_p and its quadratic
// extensions: fixed points and multipliers, maximal Siegel disks, the basin
// of an attracting fixed point, and exactly tracked orbits.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oracle.hpp"
#include "quad_ext.hpp"

namespace padyn {

class MobiusMap {
public:
    MobiusMap(Rational a, Rational b, Rational c, Prime p) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), p_(p)
    {
        require_prime(p_);
        if (b_ == 0)
            throw Error(ErrorCode::InvalidMap, "b must be nonzero");
        if (c_ == a_ * b_)
            throw Error(ErrorCode::InvalidMap, "c = ab makes the map constant");
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    Prime prime() const { return p_; }

    /// -c/b, where f is undefined.
    Rational pole() const { return -c_ / b_; }
    /// c - ab; f'(x) = (c - ab)/(bx + c)^2.
    Rational determinant() const { return c_ - a_ * b_; }
    /// (c - 1)^2 + 4ab, the discriminant of b x^2 + (c - 1) x - a.
    Rational discriminant() const { return (c_ - 1) * (c_ - 1) + 4 * a_ * b_; }

    Rational operator()(const Rational& x) const { return oracle::apply_mobius(a_, b_, c_, x); }

    /// f(x) with coefficients taken to `precision` digits; throws Pole when
    /// b x + c is indistinguishable from zero.
    ExtScalar operator()(const ExtScalar& x, int precision) const
    {
        const ExtScalar den = x.scaled(b_) + ExtScalar::from_rational(c_, p_, precision);
        if (den.is_indistinguishable_from_zero())
            throw Error(ErrorCode::Pole, "point is the pole to working precision");
        return (x + ExtScalar::from_rational(a_, p_, precision)) / den;
    }

private:
    Rational a_, b_, c_;
    Prime p_;
};

enum class FixedPointKind { Attractive, Indifferent, Repelling };

constexpr std::string_view fixed_point_kind_name(FixedPointKind k) noexcept
{
    switch (k) {
    case FixedPointKind::Attractive: return "ATTRACTIVE";
    case FixedPointKind::Indifferent: return "INDIFFERENT";
    case FixedPointKind::Repelling: return "REPELLING";
    }
    return "?";
}

inline FixedPointKind classify_multiplier(const AbsValue& lambda_norm)
{
    const AbsValue one = AbsValue::one(lambda_norm.base());
    if (lambda_norm < one)
        return FixedPointKind::Attractive;
    if (lambda_norm == one)
        return FixedPointKind::Indifferent;
    return FixedPointKind::Repelling;
}

struct FixedPointAnalysis {
    ExtScalar x1, x2;
    ExtScalar lambda1, lambda2; // f'(x1), f'(x2)
    FixedPointKind class1, class2;
    SquareClass discriminant_class;
    std::optional<Rational> x1_exact, x2_exact; // set when the discriminant is a rational square
    int precision = kDefaultPrecision;          // requested significant digits
    int working_precision = kDefaultPrecision;  // digits actually carried

    const ExtScalar& point(int which) const { return which == 1 ? x1 : x2; }
    const ExtScalar& multiplier(int which) const { return which == 1 ? lambda1 : lambda2; }
    FixedPointKind kind(int which) const { return which == 1 ? class1 : class2; }
    const std::optional<Rational>& exact(int which) const { return which == 1 ? x1_exact : x2_exact; }

    /// 1 or 2 for the attracting fixed point, if there is one.
    std::optional<int> attractor_index() const
    {
        if (class1 == FixedPointKind::Attractive)
            return 1;
        if (class2 == FixedPointKind::Attractive)
            return 2;
        return std::nullopt;
    }
};

namespace detail {

    // Sign of the rational square root chosen with the same digit rule as hensel_sqrt.
    inline Rational branch_root(const Rational& r, Prime p, int precision)
    {
        const PAdic pos = PAdic::from_rational(r, p, precision), neg = PAdic::from_rational(-r, p, precision);
        return detail::digits_less(neg, pos) ? Rational(-r) : r;
    }

    inline int reported_precision(const ExtScalar& x)
    {
        return x.is_indistinguishable_from_zero() ? PAdic::kExact : x.relative_precision();
    }

    inline FixedPointAnalysis fixed_points_at(const MobiusMap& map, int working)
    {
        const Prime p = map.prime();
        const Rational disc = map.discriminant();
        const Rational det = map.determinant();
        const SquareClass disc_class = square_class(disc, p);
        const Rational inv_2b = Rational(1) / (2 * map.b());

        auto multiplier_exact = [&](const Rational& x) {
            const Rational den = map.b() * x + map.c();
            return det / (den * den);
        };
        auto multiplier = [&](const ExtScalar& x) {
            const ExtScalar den = x.scaled(map.b()) + ExtScalar::from_rational(map.c(), p, working);
            return (den * den).inverse().scaled(det);
        };

        if (const auto root = rational_sqrt(disc)) {
            const Rational r = branch_root(*root, p, working);
            const Rational e1 = (1 - map.c() + r) * inv_2b, e2 = (1 - map.c() - r) * inv_2b;
            const ExtScalar l1 = ExtScalar::from_rational(multiplier_exact(e1), p, working);
            const ExtScalar l2 = ExtScalar::from_rational(multiplier_exact(e2), p, working);
            return FixedPointAnalysis{ExtScalar::from_rational(e1, p, working), ExtScalar::from_rational(e2, p, working), l1, l2,
                classify_multiplier(l1.norm()), classify_multiplier(l2.norm()), disc_class, e1, e2, working, working};
        }
        const ExtScalar root = sqrt_in_extension(disc, p, working);
        const ExtScalar base = ExtScalar::from_rational(1 - map.c(), p, working);
        const ExtScalar x1 = (base + root).scaled(inv_2b), x2 = (base - root).scaled(inv_2b);
        const ExtScalar l1 = multiplier(x1), l2 = multiplier(x2);
        return FixedPointAnalysis{x1, x2, l1, l2, classify_multiplier(l1.norm()), classify_multiplier(l2.norm()), disc_class,
            std::nullopt, std::nullopt, working, working};
    }

} // namespace detail

/// Fixed points x_{1,2} = (1 - c +- sqrt((c-1)^2 + 4ab)) / 2b and their
/// multipliers. Guard digits are added until every reported quantity
/// carries at least `precision` significant digits.
inline FixedPointAnalysis fixed_points(const MobiusMap& map, int precision = kDefaultPrecision)
{
    if (precision < 2)
        throw Error(ErrorCode::InvalidArgument, "precision must be at least 2");
    if (map.discriminant() == 0)
        throw Error(ErrorCode::DegenerateDiscriminant, "(c-1)^2 + 4ab = 0: the two fixed points coincide");
    int working = precision + 8;
    for (int attempt = 0;; ++attempt) {
        FixedPointAnalysis fp = detail::fixed_points_at(map, working);
        int worst = PAdic::kExact;
        for (const ExtScalar* e : {&fp.x1, &fp.x2, &fp.lambda1, &fp.lambda2})
            worst = std::min(worst, detail::reported_precision(*e));
        if (worst >= precision || attempt == 6) {
            fp.precision = precision;
            return fp;
        }
        working += precision - worst + 4;
    }
}

// ---------------------------------------------------------------------------
// Maximal Siegel disks around indifferent fixed points.

enum class SiegelCondition { IndifferentMultipliers, RadiusBound };

constexpr std::string_view siegel_condition_name(SiegelCondition c) noexcept
{
    switch (c) {
    case SiegelCondition::IndifferentMultipliers: return "indifferent_multipliers: |f'(x_i)| = 1";
    case SiegelCondition::RadiusBound: return "radius_bound: |b / sqrt(c - ab)| < 1";
    }
    return "?";
}

enum class DiskRelation { Disjoint, Coincide };

constexpr std::string_view disk_relation_name(DiskRelation r) noexcept
{
    return r == DiskRelation::Disjoint ? "DISJOINT" : "COINCIDE";
}

struct SiegelReport {
    bool applicable = false;
    std::optional<SiegelCondition> failed_condition;
    AbsValue multiplier_norm;      // |f'(x_1)| = |f'(x_2)| when indifferent
    AbsValue radius_ratio;         // |b / sqrt(c - ab)|
    AbsValue max_radius;           // |sqrt(c - ab) / b|; SI(x_i) is the open ball of this radius
    AbsValue fixed_point_distance; // |x_1 - x_2|
    DiskRelation relation = DiskRelation::Disjoint;
    bool x2_in_disk_of_x1 = false; // measured from the fixed points themselves
};

inline SiegelReport siegel_analysis(const MobiusMap& map, const FixedPointAnalysis& fp)
{
    const Prime p = map.prime();
    const ExtScalar root_det = sqrt_in_extension(map.determinant(), p, fp.working_precision);
    const AbsValue b_norm = rational_norm(map.b(), p);
    const AbsValue max_radius = ext_norm(root_det) / b_norm;
    const AbsValue distance = ext_norm(sqrt_in_extension(map.discriminant(), p, fp.working_precision)) / b_norm;

    SiegelReport r{false, std::nullopt, ext_norm(fp.lambda1), b_norm / ext_norm(root_det), max_radius, distance,
        distance >= max_radius ? DiskRelation::Disjoint : DiskRelation::Coincide, ext_norm(fp.x2 - fp.x1) < max_radius};
    if (fp.class1 != FixedPointKind::Indifferent || fp.class2 != FixedPointKind::Indifferent)
        r.failed_condition = SiegelCondition::IndifferentMultipliers;
    else if (!(r.radius_ratio < AbsValue::one(p)))
        r.failed_condition = SiegelCondition::RadiusBound;
    r.applicable = !r.failed_condition;
    return r;
}

inline SiegelReport siegel_analysis(const MobiusMap& map, int precision = kDefaultPrecision)
{
    return siegel_analysis(map, fixed_points(map, precision));
}

/// A point on the boundary sphere of SI(x_i) that leaves the sphere in one
/// step, certifying that the disk cannot be enlarged.
struct SiegelWitness {
    int which = 1;
    ExtScalar center;
    ExtScalar gamma;            // (p - 1)(b x_i + c)/b
    ExtScalar point;            // center + gamma
    AbsValue distance;          // |point - center|, equals max_radius
    AbsValue image_distance;    // |f(point) - center|, equals p * max_radius
    bool leaves_sphere = false;
    // The candidate (p - 1)(c - ab)/(b (b x_i + c)) = f'(x_i) * gamma, kept
    // for comparison: it sits on the same sphere but can stay on it.
    ExtScalar multiplier_weighted_gamma;
    AbsValue multiplier_weighted_image_distance;
    bool multiplier_weighted_leaves_sphere = false;
};

inline SiegelWitness siegel_boundary_witness(const MobiusMap& map, const FixedPointAnalysis& fp, int which = 1)
{
    const SiegelReport report = siegel_analysis(map, fp);
    if (!report.applicable)
        throw Error(ErrorCode::NotApplicable, std::string(siegel_condition_name(*report.failed_condition)));
    const Prime p = map.prime();
    const int w = fp.working_precision;
    const ExtScalar& x = fp.point(which);
    const ExtScalar bx_c = x.scaled(map.b()) + ExtScalar::from_rational(map.c(), p, w);

    auto image_distance = [&](const ExtScalar& g) { return ext_norm(map(x + g, w) - x); };

    const ExtScalar gamma = bx_c.scaled(Rational(p - 1) / map.b());
    const ExtScalar weighted = fp.multiplier(which) * gamma;
    SiegelWitness out{which, x, gamma, x + gamma, ext_norm(gamma), image_distance(gamma), false, weighted,
        image_distance(weighted), false};
    out.leaves_sphere = out.image_distance > report.max_radius;
    out.multiplier_weighted_leaves_sphere = out.multiplier_weighted_image_distance > report.max_radius;
    return out;
}

inline SiegelWitness siegel_boundary_witness(const MobiusMap& map, int precision = kDefaultPrecision, int which = 1)
{
    return siegel_boundary_witness(map, fixed_points(map, precision), which);
}

// ---------------------------------------------------------------------------
// Basin of an attracting fixed point.

enum class BasinCondition { NoAttractor, ContractionBound };

constexpr std::string_view basin_condition_name(BasinCondition c) noexcept
{
    switch (c) {
    case BasinCondition::NoAttractor: return "no_attractor: both fixed points are indifferent";
    case BasinCondition::ContractionBound: return "contraction_bound: |b / (b x_1 + c)| < 1";
    }
    return "?";
}

/// Fixed points are relabeled so that x_1 (attractor) has |f'(x_1)| < 1.
struct BasinReport {
    bool applicable = false;
    std::optional<BasinCondition> failed_condition;
    int attractor_index = 1; // label of the attractor in FixedPointAnalysis
    ExtScalar attractor;
    ExtScalar repeller;
    Rational pole;
    AbsValue multiplier_norm;       // |f'(x_1)|
    AbsValue contraction_ratio;     // |b / (b x_1 + c)|
    AbsValue delta1_scale;          // |(b x_1 + c)^2 / (c - ab)| = 1/|f'(x_1)|
    AbsValue delta2_scale;          // |(b x_1 + c) / b| = |x_1 - pole|
    AbsValue critical_sphere_radius;
    AbsValue pole_to_repeller;      // |pole - x_2| = delta2_scale / delta1_scale
    bool unit_ball_in_basin = false;      // |b / (b x_1 + c)| <= 1
    bool excluded_on_critical_sphere = false;
};

inline BasinReport basin_analysis(const MobiusMap& map, const FixedPointAnalysis& fp)
{
    const Prime p = map.prime();
    const int w = fp.working_precision;
    const auto idx = fp.attractor_index();
    const int a = idx.value_or(1);
    const ExtScalar& x1 = fp.point(a);
    const ExtScalar& x2 = fp.point(3 - a);
    const ExtScalar pole = ExtScalar::from_rational(map.pole(), p, w);
    const AbsValue b_norm = rational_norm(map.b(), p);
    const AbsValue bx_c = ext_norm(x1.scaled(map.b()) + ExtScalar::from_rational(map.c(), p, w));
    const AbsValue lambda = ext_norm(fp.multiplier(a));
    const AbsValue one = AbsValue::one(p);

    BasinReport r{false, std::nullopt, a, x1, x2, map.pole(), lambda, b_norm / bx_c, one / lambda, bx_c / b_norm, bx_c / b_norm,
        ext_norm(pole - x2), false, false};
    r.unit_ball_in_basin = r.contraction_ratio <= one;
    r.excluded_on_critical_sphere = ext_norm(pole - x1) == r.delta2_scale && ext_norm(x2 - x1) == r.delta2_scale;
    if (!idx)
        r.failed_condition = BasinCondition::NoAttractor;
    else if (!(r.contraction_ratio < one))
        r.failed_condition = BasinCondition::ContractionBound;
    r.applicable = !r.failed_condition;
    if (idx && !r.excluded_on_critical_sphere)
        throw Error(ErrorCode::PrecisionExhausted, "pole and repeller not resolved on the critical sphere");
    return r;
}

inline BasinReport basin_analysis(const MobiusMap& map, int precision = kDefaultPrecision)
{
    return basin_analysis(map, fixed_points(map, precision));
}

enum class StepRegime { InsideCriticalSphere, OnCriticalSphere, OutsideCriticalSphere };

constexpr std::string_view step_regime_name(StepRegime r) noexcept
{
    switch (r) {
    case StepRegime::InsideCriticalSphere: return "INSIDE_CRITICAL_SPHERE";
    case StepRegime::OnCriticalSphere: return "ON_CRITICAL_SPHERE";
    case StepRegime::OutsideCriticalSphere: return "OUTSIDE_CRITICAL_SPHERE";
    }
    return "?";
}

inline StepRegime step_regime(const BasinReport& basin, const ExtScalar& x)
{
    const AbsValue d = ext_norm(x - basin.attractor);
    if (d < basin.delta2_scale)
        return StepRegime::InsideCriticalSphere;
    if (d == basin.delta2_scale)
        return StepRegime::OnCriticalSphere;
    return StepRegime::OutsideCriticalSphere;
}

namespace detail {

    inline BasinReport require_basin(const MobiusMap& map, const FixedPointAnalysis& fp)
    {
        BasinReport basin = basin_analysis(map, fp);
        if (!basin.applicable)
            throw Error(ErrorCode::NotApplicable, std::string(basin_condition_name(*basin.failed_condition)));
        return basin;
    }

    inline void require_not_pole(const MobiusMap& map, const ExtScalar& x, int w)
    {
        if ((x - ExtScalar::from_rational(map.pole(), map.prime(), w)).is_indistinguishable_from_zero())
            throw Error(ErrorCode::Pole, "point is the pole to working precision");
    }

} // namespace detail

/// Closed-form |f(x) - x_1|:
///   (delta2_scale/delta1_scale) * |x - x_1| / |x - pole|.
/// Inside the critical sphere this is |f'(x_1)| |x - x_1|; outside it is
/// the constant delta2_scale/delta1_scale.
inline AbsValue predict_step_distance(const MobiusMap& map, const FixedPointAnalysis& fp, const ExtScalar& x)
{
    const BasinReport basin = detail::require_basin(map, fp);
    detail::require_not_pole(map, x, fp.working_precision);
    const ExtScalar pole = ExtScalar::from_rational(map.pole(), map.prime(), fp.working_precision);
    return basin.delta2_scale / basin.delta1_scale * ext_norm(x - basin.attractor) / ext_norm(x - pole);
}

inline AbsValue predict_step_distance(const MobiusMap& map, const ExtScalar& x, int precision = kDefaultPrecision)
{
    return predict_step_distance(map, fixed_points(map, precision), x);
}

/// |f(x) - x_1| evaluated directly.
inline AbsValue measure_step_distance(const MobiusMap& map, const FixedPointAnalysis& fp, const ExtScalar& x)
{
    const BasinReport basin = detail::require_basin(map, fp);
    const ExtScalar diff = map(x, fp.working_precision) - basin.attractor;
    if (diff.is_indistinguishable_from_zero() && diff.absolute_precision_halves() < 2 * fp.precision)
        throw Error(ErrorCode::PrecisionExhausted, "|f(x) - x_1| below the available precision");
    return ext_norm(diff);
}

/// Expansion away from the repeller x_2. Within distance
/// delta2_scale/delta1_scale of x_2: |f(x) - x_2| >= |f'(x_2)| |x - x_2|.
/// Beyond it: f(x) lands on the sphere of radius delta2_scale about x_2.
inline bool repeller_expansion_check(const MobiusMap& map, const FixedPointAnalysis& fp, const ExtScalar& x)
{
    const BasinReport basin = detail::require_basin(map, fp);
    detail::require_not_pole(map, x, fp.working_precision);
    const AbsValue threshold = basin.delta2_scale / basin.delta1_scale;
    const AbsValue d = ext_norm(x - basin.repeller);
    const AbsValue image = ext_norm(map(x, fp.working_precision) - basin.repeller);
    if (d <= threshold)
        return image >= ext_norm(fp.multiplier(3 - basin.attractor_index)) * d;
    return image == basin.delta2_scale;
}

// ---------------------------------------------------------------------------
// Orbits.

enum class OrbitTermination { MaxIters, Converged, HitPole, PrecisionExhausted };

constexpr std::string_view orbit_termination_name(OrbitTermination t) noexcept
{
    switch (t) {
    case OrbitTermination::MaxIters: return "MAX_ITERS";
    case OrbitTermination::Converged: return "CONVERGED";
    case OrbitTermination::HitPole: return "HIT_POLE";
    case OrbitTermination::PrecisionExhausted: return "PRECISION_EXHAUSTED";
    }
    return "?";
}

struct OrbitTrace {
    std::vector<ExtScalar> points; // f(x0), f^2(x0), ...
    std::vector<AbsValue> distances_to_target;
    OrbitTermination terminated = OrbitTermination::MaxIters;
    int target_index = 1; // the attracting fixed point if any, else x_1
    AbsValue convergence_threshold = AbsValue::one(2); // p^(-precision/2)
};

/// Iterates f from x0 at most n times. Stops early once the distance to
/// the target is certified to be <= p^(-precision/2), when an iterate
/// agrees with the pole in that many digits, or when the known digits no
/// longer determine the distance (PRECISION_EXHAUSTED).
inline OrbitTrace iterate(const MobiusMap& map, const FixedPointAnalysis& fp, const ExtScalar& x0, int n)
{
    const Prime p = map.prime();
    const int w = fp.working_precision;
    const int half = fp.precision; // in half-digits: p^(-precision/2)
    const ExtScalar pole = ExtScalar::from_rational(map.pole(), p, w);
    const int pole_half_valuation = map.pole() == 0 ? 0 : 2 * valuation(map.pole(), p);

    if ((x0 - pole).is_indistinguishable_from_zero())
        throw Error(ErrorCode::PoleAtStart, "x0 is the pole");

    OrbitTrace trace;
    trace.target_index = fp.attractor_index().value_or(1);
    trace.convergence_threshold = AbsValue::power(p, AbsValue::Exponent(-fp.precision, 2));
    const ExtScalar& target = fp.point(trace.target_index);

    ExtScalar x = x0;
    for (int k = 0; k < n; ++k) {
        const ExtScalar to_pole = x - pole;
        if (to_pole.is_indistinguishable_from_zero()) {
            trace.terminated = to_pole.absolute_precision_halves() - pole_half_valuation >= half ? OrbitTermination::HitPole
                                                                                                 : OrbitTermination::PrecisionExhausted;
            return trace;
        }
        x = map(x, w);
        const ExtScalar diff = x - target;
        if (diff.is_indistinguishable_from_zero() && diff.absolute_precision_halves() < half) {
            trace.terminated = OrbitTermination::PrecisionExhausted;
            return trace;
        }
        trace.points.push_back(x);
        trace.distances_to_target.push_back(ext_norm(diff));
        if (trace.distances_to_target.back() <= trace.convergence_threshold) {
            trace.terminated = OrbitTermination::Converged;
            return trace;
        }
    }
    trace.terminated = OrbitTermination::MaxIters;
    return trace;
}

inline OrbitTrace iterate(const MobiusMap& map, const ExtScalar& x0, int n, int precision = kDefaultPrecision)
{
    return iterate(map, fixed_points(map, precision), x0, n);
}

inline OrbitTrace iterate(const MobiusMap& map, const Rational& x0, int n, int precision = kDefaultPrecision)
{
    return iterate(map, ExtScalar::from_rational(x0, map.prime(), precision), n, precision);
}

// ---------------------------------------------------------------------------
// Radius certificates from the Taylor expansion at a fixed point.
//
// f(x_i + t) = x_i + f'(x_i) t / (1 + beta t), beta = b/(b x_i + c), so the
// n-th Taylor coefficient has norm |f'(x_i)| |beta|^(n-1).

inline AbsValue taylor_coefficient_norm(const MobiusMap& map, const FixedPointAnalysis& fp, int which, int n)
{
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "Taylor index must be positive");
    const ExtScalar bx_c = fp.point(which).scaled(map.b()) + ExtScalar::from_rational(map.c(), map.prime(), fp.working_precision);
    const AbsValue beta = rational_norm(map.b(), map.prime()) / ext_norm(bx_c);
    return ext_norm(fp.multiplier(which)) * beta.pow(n - 1);
}

/// sup over n >= first of |f_n| r^(n-1); nullopt when unbounded.
inline std::optional<AbsValue> taylor_tail_sup(const MobiusMap& map, const FixedPointAnalysis& fp, int which, const AbsValue& r, int first)
{
    const AbsValue lead = taylor_coefficient_norm(map, fp, which, first) * r.pow(first - 1);
    const AbsValue ratio = taylor_coefficient_norm(map, fp, which, first + 1) / taylor_coefficient_norm(map, fp, which, first) * r;
    if (ratio > AbsValue::one(map.prime()))
        return std::nullopt;
    return lead; // geometric with ratio <= 1: the first term dominates
}

/// max_{n>=2} |f_n| r^(n-1) < |f'(x_i)|: U_r(x_i) lies in a Siegel disk.
inline bool indifferent_radius_condition(const MobiusMap& map, const FixedPointAnalysis& fp, int which, const AbsValue& r)
{
    const auto s = taylor_tail_sup(map, fp, which, r, 2);
    return s && *s < ext_norm(fp.multiplier(which));
}

/// max_{n>=1} |f_n| r^(n-1) < 1: U_r(x_i) lies in the basin of x_i.
inline bool attracting_radius_condition(const MobiusMap& map, const FixedPointAnalysis& fp, int which, const AbsValue& r)
{
    const auto s = taylor_tail_sup(map, fp, which, r, 1);
    return s && *s < AbsValue::one(map.prime());
}

} // namespace padyn
