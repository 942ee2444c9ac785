// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "padyn/padyn.hpp"

using namespace padyn;

namespace {

struct Verdict {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail << "failed: " << what << "; ";
        }
    }
};

Rational random_rational(std::mt19937_64& rng, long long h)
{
    std::uniform_int_distribution<long long> n(-h, h), d(1, h);
    return Rational(n(rng), d(rng));
}

Rational scale(const Rational& x, Prime p, int k)
{
    return k >= 0 ? x * Rational(prime_power(p, k)) : x / Rational(prime_power(p, -k));
}

// 1. lambda_1 lambda_2 = 1 for 500 random maps per prime.
void reciprocity(Verdict& v)
{
    int maps = 0;
    for (Prime p : {2, 3, 5, 7, 13}) {
        std::mt19937_64 rng(100 + p);
        int done = 0;
        while (done < 500) {
            const Rational a = random_rational(rng, 99), b = random_rational(rng, 99), c = random_rational(rng, 99);
            if (b == 0 || c == a * b || (c - 1) * (c - 1) + 4 * a * b == 0)
                continue;
            const MobiusMap m(a, b, c, p);
            const FixedPointAnalysis fp = fixed_points(m, 32);
            const ExtScalar prod = fp.lambda1 * fp.lambda2 - ExtScalar::from_rational(1, p, fp.working_precision);
            v.require(prod.is_zero_to(32), "product is 1 to 32 digits");
            v.require((fp.class1 == FixedPointKind::Attractive) == (fp.class2 == FixedPointKind::Repelling), "class duality");
            ++done;
        }
        maps += done;
    }
    v.detail << maps << " maps over 5 primes";
}

// 2. Siegel disk of f(x) = x/(7x + 2) over Q_7.
void siegel_disk(Verdict& v)
{
    const MobiusMap m(0, 7, 2, 7);
    const FixedPointAnalysis fp = fixed_points(m);
    const SiegelReport r = siegel_analysis(m, fp);
    v.require(r.applicable, "applicable");
    v.require(r.max_radius == AbsValue::power(7, 1), "max radius 7^1");

    std::mt19937_64 rng(2);
    std::uniform_int_distribution<long long> unit(1, 10000);
    int orbits = 0;
    for (int e = -2; e <= 0; ++e) {
        for (int k = 0; k < 7; ++k) {
            if (orbits == 20)
                break;
            long long u = unit(rng);
            while (u % 7 == 0)
                u = unit(rng);
            const Rational x0 = scale(Rational(u, unit(rng) * 7 + 1), 7, -e); // |x0| = 7^e
            const OrbitTrace t = iterate(m, fp, ExtScalar::from_rational(x0, 7, fp.working_precision), 100);
            v.require(t.points.size() == 100, "100 iterations");
            for (const AbsValue& d : t.distances_to_target)
                v.require(d == AbsValue::power(7, e), "constant distance to 0");
            ++orbits;
        }
    }
    const SiegelWitness w = siegel_boundary_witness(m, fp, 1);
    v.require(w.distance == r.max_radius, "witness on the boundary sphere");
    v.require(w.image_distance == AbsValue::power(7, 2), "|f(y)| = 7^2");
    v.require(rational_norm(m(Rational(12, 7)), 7) == AbsValue::power(7, 2), "oracle |f(12/7)| = 7^2");
    v.detail << orbits << " orbits x 100 steps; witness gamma=12/7 gives |f(y)|=7^2; candidate 6/7 gives |f|="
             << w.multiplier_weighted_image_distance.to_string();
}

// 3. Disk relation by closed form and by membership of x_2.
void disk_relation(Verdict& v)
{
    const SiegelReport d = siegel_analysis(MobiusMap(0, 7, 2, 7));
    const SiegelReport c = siegel_analysis(MobiusMap(0, 7, 8, 7));
    v.require(d.relation == DiskRelation::Disjoint && !d.x2_in_disk_of_x1, "c=2 disjoint");
    v.require(c.relation == DiskRelation::Coincide && c.x2_in_disk_of_x1, "c=8 coincide");
    v.detail << "c=2 " << disk_relation_name(d.relation) << ", c=8 " << disk_relation_name(c.relation);
}

// 4. Basin of 0 for f(x) = x/(x + 1/7) over Q_7.
void basin(Verdict& v)
{
    const MobiusMap m(0, 1, Rational(1, 7), 7);
    const FixedPointAnalysis fp = fixed_points(m);
    const BasinReport r = basin_analysis(m, fp);
    v.require(r.applicable, "applicable");
    v.require(r.excluded_on_critical_sphere, "excluded points on the critical sphere");

    std::mt19937_64 rng(4);
    std::uniform_int_distribution<long long> n(1, 100000);
    std::set<std::string> norms;
    int starts = 0;
    while (starts < 50) {
        const int e = starts % 5 - 1; // |x0| in 7^{-1}..7^{3}
        long long u = n(rng), d = n(rng);
        if (u % 7 == 0 || d % 7 == 0)
            continue;
        const Rational x0 = scale(Rational(u, d), 7, -e);
        if (x0 == m.pole() || x0 == Rational(6, 7))
            continue;
        norms.insert(rational_norm(x0, 7).to_string());
        const OrbitTrace t = iterate(m, fp, ExtScalar::from_rational(x0, 7, fp.working_precision), 200);
        v.require(t.terminated == OrbitTermination::Converged, "converges within 200 steps");
        for (std::size_t k = 1; k < t.distances_to_target.size(); ++k)
            if (t.distances_to_target[k - 1] < AbsValue::one(7))
                v.require(t.distances_to_target[k] == t.distances_to_target[k - 1] * AbsValue::power(7, -1), "ratio 1/7 inside the unit ball");
        ++starts;
    }
    v.require(norms.size() >= 4 && norms.contains("7^{1}"), "at least 4 norms including 7^1");

    const OrbitTrace rep = iterate(m, fp, ExtScalar::from_rational(Rational(6, 7), 7, fp.working_precision), 200);
    v.require(rep.terminated != OrbitTermination::Converged, "repeller does not converge");
    const auto exact = oracle::exact_iterate(0, 1, Rational(1, 7), Rational(6, 7), 200);
    v.require(exact.back() == Rational(6, 7), "repeller is fixed exactly");
    bool pole_rejected = false;
    try {
        iterate(m, fp, ExtScalar::from_rational(m.pole(), 7, fp.working_precision), 200);
    } catch (const Error& e) {
        pole_rejected = e.code() == ErrorCode::PoleAtStart;
    }
    v.require(pole_rejected, "pole is rejected");
    v.detail << starts << " starts over " << norms.size() << " norms; repeller " << orbit_termination_name(rep.terminated);
}

// 5. Predicted |f(x) - x_1| equals the measured one.
void predictor(Verdict& v)
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> shift(-3, 3), prime_pick(0, 4);
    const Prime primes[] = {2, 3, 5, 7, 13};
    int pairs = 0, oracle_checked = 0;
    while (pairs < 1000) {
        const Prime p = primes[prime_pick(rng)];
        const Rational a = scale(random_rational(rng, 30), p, 1 + std::abs(shift(rng)));
        const Rational b = random_rational(rng, 30);
        const Rational c = scale(random_rational(rng, 30), p, -1 - std::abs(shift(rng)) % 2);
        if (b == 0 || c == 0 || c == a * b || (c - 1) * (c - 1) + 4 * a * b == 0)
            continue;
        const MobiusMap m(a, b, c, p);
        const FixedPointAnalysis fp = fixed_points(m);
        if (!basin_analysis(m, fp).applicable)
            continue;
        for (int k = 0; k < 10 && pairs < 1000; ++k) {
            const Rational x = scale(random_rational(rng, 1000), p, shift(rng));
            if (x == m.pole())
                continue;
            const ExtScalar xe = ExtScalar::from_rational(x, p, fp.working_precision);
            const AbsValue predicted = predict_step_distance(m, fp, xe);
            v.require(predicted == measure_step_distance(m, fp, xe), "prediction equals measurement");
            if (const auto& exact = fp.exact(*fp.attractor_index())) {
                v.require(predicted == rational_norm(m(x) - *exact, p), "prediction equals exact rational distance");
                ++oracle_checked;
            }
            ++pairs;
        }
    }
    v.detail << pairs << " pairs, " << oracle_checked << " also against exact rationals";
}

// 6. Balls of radius p^-l map onto balls, checked exhaustively mod p^(l+2).
void isometry(Verdict& v)
{
    std::size_t evaluated = 0, violations = 0;
    for (Prime p : {2, 3, 5, 7}) {
        for (const auto& [b, c] : std::vector<std::pair<Rational, Rational>>{{Rational(p), Rational(2 * p + 1)},
                 {Rational(p * p, 3 * p + 1), Rational(p - 1)}, {Rational(-p, p * p + p + 1), Rational(4 * p + 1, 2 * p + 1)}}) {
            const SphereMap m = SphereMap::validate(b, c, p);
            for (int l = 1; l <= 3; ++l) {
                const oracle::ResidueCheck check = oracle::exhaustive_residue_check(b, c, p, l);
                evaluated += check.evaluated;
                violations += check.violations;
                v.require(check.table == residue_model(m, l).table, "oracle table equals residue model");
            }
        }
    }
    v.require(violations == 0, "zero violations");
    v.detail << evaluated << " unit residues evaluated, " << violations << " violations";
}

// 7. Non-ergodicity witnesses.
void ergodicity(Verdict& v)
{
    const SphereMap m7 = SphereMap::validate(7, 2, 7);
    const ErgodicityReport r = nonergodicity_witness(m7, 3);
    const ResidueMapModel model = residue_model(m7, 1);
    v.require(r.verdict == "NOT_ERGODIC", "verdict");
    v.require(r.witness && r.witness->level == 1 && r.witness->measure == Rational(1, 2), "measure 1/2 at level 1");
    v.require(model.cycles == std::vector<std::vector<std::int64_t>>{{1, 4, 2}, {3, 5, 6}}, "cycles {1,4,2}/{3,5,6}");
    v.require(r.condition.holds && r.condition.leading_digit == 2, "escape condition holds for a0=2");

    const SphereMap m2 = SphereMap::validate(2, 3, 2);
    const ErgodicityReport t = nonergodicity_witness(m2);
    v.require(!t.condition.holds, "escape condition fails for p=2");
    v.require(t.two_adic_ball && t.two_adic_ball->invariant && t.two_adic_ball->unnormalized_measure == Rational(1, 2),
        "ball of radius 1/2 invariant with mass 1/2");
    v.require(t.witness && t.witness->measure == Rational(1, 2) && witness_is_invariant(m2, *t.witness), "p=2 witness of measure 1/2");
    v.detail << "p=7 witness {1,4,2} mu=1/2; p=2 ball U_{1/2}(1) invariant, mass 1/2 (normalized "
             << to_string(t.two_adic_ball->normalized_measure) << "), level-" << t.witness->level << " witness mu=" << to_string(t.witness->measure);
}

// 8. Closed-form iterates against composition.
void formula_audit(Verdict& v)
{
    const SphereMap m = SphereMap::validate(7, 2, 7);
    for (int n : {1, 2}) {
        const IterateAudit a = iterate_formula_audit(m, n);
        v.require(a.checks[0].outcome == AuditOutcome::Match && a.checks[2].outcome == AuditOutcome::Match, "stated forms match for N<=2");
    }
    const IterateAudit a = iterate_formula_audit(m, 3);
    const FormulaCheck& fwd = a.checks[0];
    v.require(fwd.composed.slope == 49 && fwd.composed.constant == 8, "composed denominator 49x + 8");
    for (const Rational& x : a.sample_points)
        v.require(fwd.composed(x) == oracle::exact_iterate(0, 7, 2, x, 3).back(), "composition equals 3-fold iteration");
    const bool flagged = fwd.outcome == AuditOutcome::Match || !a.warnings.empty();
    v.require(flagged, "mismatch reaches the warning channel");
    v.require(a.inverse_undoes_forward, "f^-1(f(x)) = x");
    v.detail << "N=3 composed x/(49x+8), stated x/(" << to_string(fwd.formula.slope) << "x+" << to_string(fwd.formula.constant) << ") "
             << audit_outcome_name(fwd.outcome) << ", " << a.warnings.size() << " warnings";
}

// 9. Order-based escape condition against brute force.
void escape(Verdict& v)
{
    int cases = 0;
    for (Prime p : {3, 5, 7, 11, 13}) {
        for (std::int64_t a0 = 1; a0 < p; ++a0) {
            bool brute = true;
            std::int64_t power = a0;
            for (int n = 1; n <= 64; ++n) {
                brute = brute && power != 1;
                power = mul_mod(power, power, p);
            }
            v.require(escape_condition(SphereMap::validate(p, a0, p)).holds == brute, "agrees with brute force");
            ++cases;
        }
    }
    v.detail << cases << " leading digits";
}

// 10. Arithmetic soundness.
void arithmetic(Verdict& v)
{
    for (Prime p : {2, 3, 5, 7, 13}) {
        std::mt19937_64 rng(10 + p);
        for (int i = 0; i < 10000; ++i) {
            const Rational q = random_rational(rng, 1'000'000);
            const PAdic x = PAdic::from_rational(q, p, 20);
            if (q == 0) {
                v.require(x.is_exact_zero(), "zero");
                continue;
            }
            // the representative agrees with q to every carried digit
            const Rational err = x.representative() - q;
            v.require(err == 0 || valuation(err, p) >= x.absolute_precision(), "round trip");
            v.require(PAdic::parse(x.to_string(), p) == x, "parse inverts display");
        }
        for (int i = 0; i < 2000; ++i) {
            const Rational q1 = scale(random_rational(rng, 10000), p, i % 5 - 2), q2 = random_rational(rng, 10000);
            if (q1 == 0 || q2 == 0)
                continue;
            const PAdic x = PAdic::from_rational(q1, p, 24), y = PAdic::from_rational(q2, p, 24);
            v.require(norm(x + y) <= max(norm(x), norm(y)), "ultrametric");
            if (norm(x) != norm(y))
                v.require(norm(x + y) == max(norm(x), norm(y)), "strict ultrametric");
            v.require(norm(x * y) == norm(x) * norm(y), "multiplicative");
            const Rational sq = q1 * q1;
            const PAdic s = PAdic::from_rational(sq, p, 24);
            const PAdic r = hensel_sqrt(s);
            const PAdic diff = r * r - s;
            v.require(diff.is_bottom() && diff.absolute_precision() >= *s.valuation() + r.precision(), "root squares back");
        }
    }
    v.detail << "5 primes x 10^4 round trips";
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        double budget_seconds;
        std::function<void(Verdict&)> run;
    };
    const Criterion criteria[] = {{1, "multiplier reciprocity", 10, reciprocity}, {2, "Siegel disk p=7 b=7 c=2", 5, siegel_disk},
        {3, "disk relation", 0, disk_relation}, {4, "basin p=7 b=1 c=1/7", 0, basin}, {5, "step-distance predictor", 0, predictor},
        {6, "ball isometry exhaustive", 0, isometry}, {7, "non-ergodicity witnesses", 5, ergodicity}, {8, "iterate formula audit", 0, formula_audit},
        {9, "escape condition equivalence", 2, escape}, {10, "arithmetic soundness", 0, arithmetic}};

    int failed = 0;
    for (const Criterion& c : criteria) {
        Verdict v;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(v);
        } catch (const std::exception& e) {
            v.ok = false;
            v.detail << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && secs >= c.budget_seconds) {
            v.ok = false;
            v.detail << " over time budget " << c.budget_seconds << " s;";
        }
        failed += !v.ok;
        std::cout << (v.ok ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << "  (" << std::fixed;
        std::cout.precision(2);
        std::cout << secs << " s)  " << v.detail.str() << '\n';
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << '\n';
    return failed == 0 ? 0 : 1;
}
