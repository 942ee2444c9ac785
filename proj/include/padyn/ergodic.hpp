#pragma once

// f(x) = x/(bx + c) on the unit sphere S_1(0) of Q_p, with |c| = 1 and
// |b| < 1. f is an isometry that permutes the balls of radius p^(-l), so
// its dynamics at level l reduce to a permutation of the unit residues
// mod p^l.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oracle.hpp"

namespace padyn {

inline constexpr int kMaxResidueLevel = 6;
inline constexpr std::int64_t kMaxResidueTable = 10'000'000;
inline constexpr int kMaxAuditDepth = 12;

class SphereMap {
public:
    /// Throws InvalidNorms unless c != 0, |c| = 1 and |b| < 1.
    static SphereMap validate(const Rational& b, const Rational& c, Prime p)
    {
        require_prime(p);
        if (c == 0 || valuation(c, p) != 0)
            throw Error(ErrorCode::InvalidNorms, "|c| must be 1");
        if (b != 0 && valuation(b, p) < 1)
            throw Error(ErrorCode::InvalidNorms, "|b| must be < 1");
        SphereMap m(b, c, p);
        for (std::int64_t x = 1; x <= std::min<std::int64_t>(p - 1, 50); ++x)
            if (valuation(m(Rational(x)), p) != 0)
                throw Error(ErrorCode::InvalidNorms, "f moves a unit off the sphere");
        return m;
    }

    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    Prime prime() const { return p_; }

    Rational operator()(const Rational& x) const { return oracle::apply_mobius(0, b_, c_, x); }

    /// First p-adic digit of c.
    std::int64_t leading_digit() const { return residue_of(c_, BigInt(p_)).convert_to<std::int64_t>(); }

private:
    SphereMap(Rational b, Rational c, Prime p) : b_(std::move(b)), c_(std::move(c)), p_(p) { }
    Rational b_, c_;
    Prime p_;
};

inline bool is_unit(const Rational& x, Prime p) { return x != 0 && valuation(x, p) == 0; }

/// |f(x) - f(a)| = |x - a| for sampled x in the closed ball of radius p^(-l) about a.
inline bool isometry_check(const SphereMap& map, const Rational& a, int level)
{
    const Prime p = map.prime();
    if (!is_unit(a, p))
        throw Error(ErrorCode::NotOnSphere, "center must be a unit");
    if (level < 1)
        throw Error(ErrorCode::InvalidArgument, "level must be positive");
    const Rational fa = map(a);
    for (int j = 0; j < 4; ++j) {
        const Rational step(prime_power(p, level + j));
        for (std::int64_t t : {1, 2, 3, 5}) {
            if (t % p == 0)
                continue;
            const Rational x = a + t * step;
            if (rational_norm(map(x) - fa, p) != rational_norm(x - a, p))
                return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Closed forms for f^N and f^-N.
//
// Composition gives f^N(x) = x / (b x (1 + c + ... + c^(N-1)) + c^N). The
// closed forms below are a second, independently stated family: explicit
// instances for N <= 3 and a general expression
//   f^N(x)  = x / (b x (1 + S_N) + c^(2^(N-1))),  S_N = sum_{m=0}^{N-3} c^(2^m (2^(N-2) - 1))
//   f^-N(x) = x / (-(b/c) x (1 + Z_N) + c^-(2^(N-1))), Z_N likewise in 1/c.
// They are audited against composition, which is authoritative.

enum class FormulaSource { StatedInstance, GeneralExpression };

constexpr std::string_view formula_source_name(FormulaSource s) noexcept
{
    return s == FormulaSource::StatedInstance ? "STATED_INSTANCE" : "GENERAL_EXPRESSION";
}

/// f^N(x) = x / (slope x + constant).
struct IterateCoefficients {
    Rational slope;
    Rational constant;
    FormulaSource source = FormulaSource::GeneralExpression;

    Rational operator()(const Rational& x) const
    {
        const Rational den = slope * x + constant;
        if (den == 0)
            throw Error(ErrorCode::Pole, "closed form has a pole at x");
        return x / den;
    }
};

namespace detail {

    inline Rational rpow(const Rational& x, const BigInt& e)
    {
        Rational out = 1, base = x;
        for (BigInt k = e; k > 0; k >>= 1) {
            if ((k & 1) != 0)
                out *= base;
            if (k > 1)
                base *= base;
        }
        return out;
    }

    inline BigInt two_pow(int k) { return BigInt(1) << k; }

    // 1 + sum_{m=0}^{N-3} r^(2^m (2^(N-2) - 1)) and r^(2^(N-1))
    inline std::pair<Rational, Rational> general_terms(const Rational& r, int n)
    {
        Rational sum = 1;
        for (int m = 0; m <= n - 3; ++m)
            sum += rpow(r, two_pow(m) * (two_pow(n - 2) - 1));
        return {sum, rpow(r, two_pow(n - 1))};
    }

    inline void require_depth(int n)
    {
        if (n < 1 || n > kMaxAuditDepth)
            throw Error(ErrorCode::InvalidArgument, "N must be in 1.." + std::to_string(kMaxAuditDepth));
    }

} // namespace detail

inline IterateCoefficients general_form_iterate(const SphereMap& map, int n)
{
    detail::require_depth(n);
    const auto [sum, power] = detail::general_terms(map.c(), n);
    return {map.b() * sum, power, FormulaSource::GeneralExpression};
}

inline IterateCoefficients general_form_inverse_iterate(const SphereMap& map, int n)
{
    detail::require_depth(n);
    const auto [sum, power] = detail::general_terms(Rational(1) / map.c(), n);
    return {-map.b() / map.c() * sum, power, FormulaSource::GeneralExpression};
}

inline IterateCoefficients closed_form_iterate(const SphereMap& map, int n)
{
    detail::require_depth(n);
    const Rational& b = map.b();
    const Rational& c = map.c();
    switch (n) {
    case 1: return {b, c, FormulaSource::StatedInstance};
    case 2: return {b * (1 + c), c * c, FormulaSource::StatedInstance};
    case 3: return {b * (1 + c * c + c * c * c), c * c * c * c, FormulaSource::StatedInstance};
    default: return general_form_iterate(map, n);
    }
}

inline IterateCoefficients closed_form_inverse_iterate(const SphereMap& map, int n)
{
    detail::require_depth(n);
    const Rational k = -map.b() / map.c();
    const Rational r = Rational(1) / map.c();
    switch (n) {
    case 1: return {k, r, FormulaSource::StatedInstance};
    case 2: return {k * (1 + r), r * r, FormulaSource::StatedInstance};
    case 3: return {k * (1 + r * r + r * r * r), r * r * r * r, FormulaSource::StatedInstance};
    default: return general_form_inverse_iterate(map, n);
    }
}

enum class AuditOutcome { Match, Mismatch };

constexpr std::string_view audit_outcome_name(AuditOutcome o) noexcept { return o == AuditOutcome::Match ? "MATCH" : "MISMATCH"; }

struct FormulaCheck {
    std::string label;
    int n = 1;
    IterateCoefficients formula;
    IterateCoefficients composed; // authoritative
    AuditOutcome outcome = AuditOutcome::Match;
    std::optional<int> first_mismatch{};      // smallest N' <= n where the family disagrees
    std::optional<Rational> counterexample{}; // sample x at level n
    std::optional<Rational> formula_value{}, composed_value{};
};

struct IterateAudit {
    int n = 1;
    std::vector<Rational> sample_points;
    std::vector<FormulaCheck> checks; // closed form, general expression; forward then inverse
    bool inverse_undoes_forward = true; // f^-1(f(x)) = x via the N = 1 closed forms
    std::vector<std::string> warnings;
};

/// Unit sample points 1, 2, ... skipping multiples of p.
inline std::vector<Rational> audit_samples(const SphereMap& map, int count)
{
    std::vector<Rational> out;
    for (std::int64_t x = 1; static_cast<int>(out.size()) < count; ++x) {
        if (x % map.prime() == 0)
            continue;
        out.emplace_back(x);
    }
    return out;
}

inline IterateAudit iterate_formula_audit(const SphereMap& map, int n, int samples = 4)
{
    detail::require_depth(n);
    if (samples < 1)
        throw Error(ErrorCode::InvalidArgument, "need at least one sample point");
    IterateAudit audit;
    audit.n = n;
    audit.sample_points = audit_samples(map, samples);

    using Builder = IterateCoefficients (*)(const SphereMap&, int);
    struct Family {
        const char* label;
        Builder family;
        bool inverse;
    };
    const Family families[] = {{"forward closed form", closed_form_iterate, false},
        {"forward general expression", general_form_iterate, false},
        {"inverse closed form", closed_form_inverse_iterate, true},
        {"inverse general expression", general_form_inverse_iterate, true}};

    auto composed_at = [&](int k, bool inverse) {
        const auto [s, t] = inverse ? oracle::composed_inverse_coefficients(map.b(), map.c(), k)
                                    : oracle::composed_coefficients(map.b(), map.c(), k);
        return IterateCoefficients{s, t, FormulaSource::GeneralExpression};
    };
    auto composed_value = [&](const Rational& x, int k, bool inverse) {
        if (!inverse)
            return oracle::exact_iterate(0, map.b(), map.c(), x, k).back();
        return oracle::exact_iterate(0, -map.b() / map.c(), Rational(1) / map.c(), x, k).back();
    };

    for (const Family& s : families) {
        FormulaCheck fc{.label = s.label, .n = n, .formula = s.family(map, n), .composed = composed_at(n, s.inverse)};
        for (int k = 1; k <= n && !fc.first_mismatch; ++k) {
            const IterateCoefficients f = s.family(map, k), g = composed_at(k, s.inverse);
            if (f.slope != g.slope || f.constant != g.constant)
                fc.first_mismatch = k;
        }
        for (const Rational& x : audit.sample_points) {
            Rational want, got;
            try {
                want = composed_value(x, n, s.inverse);
            } catch (const Error&) {
                continue; // the orbit of x meets the pole
            }
            try {
                got = fc.formula(x);
            } catch (const Error&) {
                fc.outcome = AuditOutcome::Mismatch;
                fc.counterexample = x;
                fc.composed_value = want;
                break;
            }
            if (got != want) {
                fc.outcome = AuditOutcome::Mismatch;
                fc.counterexample = x;
                fc.formula_value = got;
                fc.composed_value = want;
                break;
            }
        }
        if (fc.formula.slope != fc.composed.slope || fc.formula.constant != fc.composed.constant)
            fc.outcome = AuditOutcome::Mismatch;
        if (fc.outcome == AuditOutcome::Mismatch) {
            std::string w = std::string(s.label) + " disagrees with composition at N=" + std::to_string(n) + ": x/(" + to_string(fc.formula.slope)
                + " x + " + to_string(fc.formula.constant) + ") vs x/(" + to_string(fc.composed.slope) + " x + " + to_string(fc.composed.constant) + ")";
            if (fc.counterexample)
                w += " at x=" + to_string(*fc.counterexample);
            audit.warnings.push_back(std::move(w));
        }
        audit.checks.push_back(std::move(fc));
    }

    const IterateCoefficients fwd = closed_form_iterate(map, 1), inv = closed_form_inverse_iterate(map, 1);
    for (const Rational& x : audit.sample_points) {
        try {
            if (inv(fwd(x)) != x)
                audit.inverse_undoes_forward = false;
        } catch (const Error&) {
        }
    }
    if (!audit.inverse_undoes_forward)
        audit.warnings.emplace_back("inverse closed form does not undo f at N=1");
    return audit;
}

// ---------------------------------------------------------------------------
// |1 - c^(2^(N-1))| = 1 for every N >= 1.
//
// This holds iff no power a0^(2^k) is 1 mod p, i.e. iff the multiplicative
// order of the leading digit a0 is not a power of two.

struct EscapeCondition {
    bool holds = false;
    std::int64_t leading_digit = 1;
    std::int64_t order = 1;
};

inline std::int64_t multiplicative_order(std::int64_t a, Prime p)
{
    a = ((a % p) + p) % p;
    if (a == 0)
        throw Error(ErrorCode::InvalidArgument, "zero has no multiplicative order");
    std::int64_t order = p - 1;
    std::int64_t m = p - 1;
    for (std::int64_t q = 2; q * q <= m; ++q) {
        if (m % q != 0)
            continue;
        while (m % q == 0)
            m /= q;
        while (order % q == 0 && pow_mod(a, static_cast<std::uint64_t>(order / q), p) == 1)
            order /= q;
    }
    if (m > 1 && order % m == 0 && pow_mod(a, static_cast<std::uint64_t>(order / m), p) == 1)
        order /= m;
    return order;
}

inline EscapeCondition escape_condition(const SphereMap& map)
{
    EscapeCondition out;
    out.leading_digit = map.leading_digit();
    out.order = multiplicative_order(out.leading_digit, map.prime());
    out.holds = (out.order & (out.order - 1)) != 0;
    return out;
}

// ---------------------------------------------------------------------------
// Residue model at level l.

struct ResidueMapModel {
    Prime prime = 2;
    int level = 1;
    std::int64_t modulus = 2;
    std::map<std::int64_t, std::int64_t> table;
    std::vector<std::vector<std::int64_t>> cycles; // each starts at its least element; sorted by start
    std::vector<Rational> measures;                // normalized so that the sphere has measure 1
};

/// Normalized Haar measure of one ball of radius p^(-l) in the sphere.
inline Rational ball_measure(Prime p, int level) { return Rational(1) / Rational(BigInt(p - 1) * prime_power(p, level - 1)); }

inline ResidueMapModel residue_model(const SphereMap& map, int level)
{
    const Prime p = map.prime();
    if (level < 1)
        throw Error(ErrorCode::InvalidArgument, "level must be positive");
    if (level > kMaxResidueLevel)
        throw Error(ErrorCode::LevelTooLarge, "level exceeds " + std::to_string(kMaxResidueLevel));
    const BigInt m = prime_power(p, level);
    if (m > kMaxResidueTable)
        throw Error(ErrorCode::LevelTooLarge, "p^l exceeds " + std::to_string(kMaxResidueTable));

    ResidueMapModel model;
    model.prime = p;
    model.level = level;
    model.modulus = m.convert_to<std::int64_t>();
    const std::int64_t mod_l = model.modulus;
    const std::int64_t br = residue_of(map.b(), m).convert_to<std::int64_t>();
    const std::int64_t cr = residue_of(map.c(), m).convert_to<std::int64_t>();
    for (std::int64_t a = 1; a < mod_l; ++a) {
        if (a % p == 0)
            continue;
        const std::int64_t den = (mul_mod(br, a, mod_l) + cr) % mod_l;
        model.table.emplace(a, mul_mod(a, mod_inverse(den, mod_l), mod_l));
    }

    std::map<std::int64_t, bool> seen;
    const Rational unit = ball_measure(p, level);
    for (const auto& [start, image] : model.table) {
        if (seen[start])
            continue;
        std::vector<std::int64_t> cycle;
        for (std::int64_t x = start; !seen[x]; x = model.table.at(x)) {
            seen[x] = true;
            cycle.push_back(x);
        }
        model.measures.push_back(unit * static_cast<long long>(cycle.size()));
        model.cycles.push_back(std::move(cycle));
    }
    return model;
}

// ---------------------------------------------------------------------------
// Non-ergodicity.

enum class EscapeRegime { ConditionHolds, ConditionFails };

constexpr std::string_view escape_regime_name(EscapeRegime r) noexcept
{
    return r == EscapeRegime::ConditionHolds ? "ESCAPE_CONDITION_HOLDS" : "ESCAPE_CONDITION_FAILS";
}

/// A ball-union A = U(a) u U(f(a)) u ... u U(f^(N-1)(a)) at level l with f(A) = A.
struct InvariantSetWitness {
    int cycle_length = 1;
    int level = 1;
    std::vector<std::int64_t> invariant_set;
    Rational measure;
};

/// For p = 2: |f(a) - a| <= 1/2 for every unit a, so the closed ball of
/// radius 1/2 about a is invariant. In Z_2 that ball is the whole sphere.
struct TwoAdicBall {
    Rational center = 1;
    AbsValue radius = AbsValue::power(2, -1);
    bool invariant = false;
    Rational unnormalized_measure = Rational(1, 2); // 1/p^l with l = 1
    Rational normalized_measure = 1;
    bool covers_sphere = true;
};

struct ErgodicityReport {
    EscapeCondition condition;
    EscapeRegime regime = EscapeRegime::ConditionFails;
    std::optional<InvariantSetWitness> witness;
    std::optional<TwoAdicBall> two_adic_ball;
    int levels_searched = 0;
    std::string verdict = "NOT_ERGODIC";
};

inline TwoAdicBall two_adic_ball(const SphereMap& map)
{
    TwoAdicBall ball;
    const Rational a = 1;
    ball.invariant = rational_norm(map(a) - a, 2) <= ball.radius;
    return ball;
}

/// Searches l = 1..max_level for the shortest residue cycle whose ball
/// union has measure < 1. Throws WitnessNotFoundAtLevel when every
/// searched level is a single cycle.
inline ErgodicityReport nonergodicity_witness(const SphereMap& map, int max_level = 4)
{
    if (max_level < 1)
        throw Error(ErrorCode::InvalidArgument, "max level must be positive");
    ErgodicityReport report;
    report.condition = escape_condition(map);
    report.regime = report.condition.holds ? EscapeRegime::ConditionHolds : EscapeRegime::ConditionFails;
    if (map.prime() == 2)
        report.two_adic_ball = two_adic_ball(map);

    for (int l = 1; l <= max_level; ++l) {
        const ResidueMapModel model = residue_model(map, l);
        report.levels_searched = l;
        if (model.cycles.size() < 2)
            continue;
        std::size_t best = 0;
        for (std::size_t i = 1; i < model.cycles.size(); ++i)
            if (model.cycles[i].size() < model.cycles[best].size())
                best = i;
        report.witness = InvariantSetWitness{static_cast<int>(model.cycles[best].size()), l, model.cycles[best], model.measures[best]};
        return report;
    }
    throw Error(ErrorCode::WitnessNotFoundAtLevel,
        "every residue model up to level " + std::to_string(max_level) + " is a single cycle; raise --max-level");
}

/// f(A) = A for the witness ball union, checked on the residue table.
inline bool witness_is_invariant(const SphereMap& map, const InvariantSetWitness& w)
{
    const ResidueMapModel model = residue_model(map, w.level);
    std::vector<std::int64_t> image;
    for (std::int64_t r : w.invariant_set)
        image.push_back(model.table.at(r));
    std::vector<std::int64_t> a = w.invariant_set;
    std::sort(a.begin(), a.end());
    std::sort(image.begin(), image.end());
    return a == image;
}

} // namespace padyn
