#include <random>
#include <set>

#include <gtest/gtest.h>

#include "padyn/ergodic.hpp"

using namespace padyn;

namespace {

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::InvalidArgument;
}

} // namespace

TEST(SphereMap, Validation)
{
    EXPECT_NO_THROW(SphereMap::validate(7, 2, 7));
    EXPECT_NO_THROW(SphereMap::validate(2, 3, 2));
    EXPECT_NO_THROW(SphereMap::validate(0, 3, 5));
    EXPECT_EQ(code_of([] { SphereMap::validate(1, 2, 7); }), ErrorCode::InvalidNorms);
    EXPECT_EQ(code_of([] { SphereMap::validate(7, 14, 7); }), ErrorCode::InvalidNorms);
    EXPECT_EQ(code_of([] { SphereMap::validate(7, 0, 7); }), ErrorCode::InvalidNorms);
    EXPECT_EQ(SphereMap::validate(Rational(49, 3), Rational(16, 5), 7).leading_digit(), 6); // 16/5 = 6 mod 7
}

TEST(SphereMap, Isometry)
{
    const SphereMap m = SphereMap::validate(7, 2, 7);
    for (int l = 1; l <= 4; ++l)
        for (const Rational& a : {Rational(1), Rational(3), Rational(-2, 9)})
            EXPECT_TRUE(isometry_check(m, a, l));
    EXPECT_EQ(code_of([&] { isometry_check(m, 7, 1); }), ErrorCode::NotOnSphere);

    // all x = 1 mod 7 land in the ball of f(1) = 1/9 = 4 mod 7
    for (std::int64_t x = 1; x < 49; x += 7)
        EXPECT_EQ(residue_of(m(Rational(x)), BigInt(7)), 4);
}

TEST(ClosedForms, StatedInstances)
{
    const SphereMap m = SphereMap::validate(7, 2, 7);
    const IterateCoefficients f2 = closed_form_iterate(m, 2), f3 = closed_form_iterate(m, 3);
    EXPECT_EQ(f2.slope, 7 * 3);
    EXPECT_EQ(f2.constant, 4);
    EXPECT_EQ(f3.slope, 7 * (1 + 4 + 8));
    EXPECT_EQ(f3.constant, 16);
    EXPECT_EQ(f3.source, FormulaSource::StatedInstance);
    EXPECT_EQ(closed_form_iterate(m, 5).source, FormulaSource::GeneralExpression);

    const IterateCoefficients i1 = closed_form_inverse_iterate(m, 1);
    EXPECT_EQ(i1.slope, Rational(-7, 2));
    EXPECT_EQ(i1.constant, Rational(1, 2));
    for (std::int64_t x = 1; x < 30; ++x)
        if (x % 7 != 0) {
            EXPECT_EQ(i1(m(Rational(x))), Rational(x));
        }
    const IterateCoefficients i2 = closed_form_inverse_iterate(m, 2);
    EXPECT_EQ(i2.slope, Rational(-7, 2) * Rational(3, 2));
    EXPECT_EQ(i2.constant, Rational(1, 4));

    // the general expression at N = 2 drops the c term
    EXPECT_EQ(general_form_iterate(m, 2).slope, 7);
    EXPECT_EQ(general_form_iterate(m, 1).slope, 7);
    EXPECT_EQ(general_form_iterate(m, 1).constant, 2);
}

TEST(ClosedForms, Audit)
{
    const SphereMap m = SphereMap::validate(7, 2, 7);
    for (int n : {1, 2}) {
        const IterateAudit a = iterate_formula_audit(m, n);
        EXPECT_EQ(a.checks[0].outcome, AuditOutcome::Match) << n;
        EXPECT_EQ(a.checks[2].outcome, AuditOutcome::Match) << n;
        EXPECT_TRUE(a.inverse_undoes_forward);
    }
    const IterateAudit a3 = iterate_formula_audit(m, 3);
    const FormulaCheck& fwd = a3.checks[0];
    EXPECT_EQ(fwd.composed.slope, 49); // b (1 + c + c^2)
    EXPECT_EQ(fwd.composed.constant, 8);
    EXPECT_EQ(fwd.formula.slope, 91);
    EXPECT_EQ(fwd.outcome, AuditOutcome::Mismatch);
    EXPECT_EQ(*fwd.first_mismatch, 3);
    EXPECT_EQ(*fwd.counterexample, 1);
    EXPECT_EQ(*fwd.composed_value, Rational(1, 57));
    EXPECT_EQ(*fwd.formula_value, Rational(1, 107));
    EXPECT_EQ(fwd.composed_value, oracle::exact_iterate(0, 7, 2, 1, 3).back());
    EXPECT_FALSE(a3.warnings.empty());
    // the general expression already fails at N = 2
    EXPECT_EQ(*a3.checks[1].first_mismatch, 2);

    // b = 0: f^N(x) = x / c^N
    const SphereMap id = SphereMap::validate(0, 3, 5);
    const IterateAudit z = iterate_formula_audit(id, 2);
    EXPECT_EQ(z.checks[0].composed.constant, 9);
    EXPECT_EQ(z.checks[0].outcome, AuditOutcome::Match);

    EXPECT_EQ(code_of([&] { iterate_formula_audit(m, 13); }), ErrorCode::InvalidArgument);
}

TEST(EscapeCondition, Examples)
{
    const EscapeCondition c7 = escape_condition(SphereMap::validate(7, 2, 7));
    EXPECT_TRUE(c7.holds);
    EXPECT_EQ(c7.leading_digit, 2);
    EXPECT_EQ(c7.order, 3);
    EXPECT_FALSE(escape_condition(SphereMap::validate(2, 3, 2)).holds);
    EXPECT_FALSE(escape_condition(SphereMap::validate(2, Rational(5, 7), 2)).holds);
    const EscapeCondition c6 = escape_condition(SphereMap::validate(7, 6, 7));
    EXPECT_FALSE(c6.holds);
    EXPECT_EQ(c6.order, 2);
}

TEST(EscapeCondition, AgreesWithBruteForce)
{
    for (Prime p : {3, 5, 7, 11, 13}) {
        for (std::int64_t a0 = 1; a0 < p; ++a0) {
            // |1 - c^(2^(N-1))| = 1 iff a0^(2^(N-1)) != 1 mod p
            bool brute = true;
            std::int64_t power = a0;
            for (int n = 1; n <= 64; ++n) {
                if (power == 1)
                    brute = false;
                power = mul_mod(power, power, p);
            }
            const EscapeCondition c = escape_condition(SphereMap::validate(p, a0 + p * 5, p));
            EXPECT_EQ(c.holds, brute) << a0 << " mod " << p;
            EXPECT_EQ(pow_mod(a0, static_cast<std::uint64_t>(c.order), p), 1);
            for (std::int64_t d = 1; d < c.order; ++d)
                EXPECT_NE(pow_mod(a0, static_cast<std::uint64_t>(d), p), 1);
        }
    }
}

TEST(ResidueModel, Examples)
{
    const SphereMap m = SphereMap::validate(7, 2, 7);
    const ResidueMapModel r = residue_model(m, 1);
    EXPECT_EQ(r.table, (std::map<std::int64_t, std::int64_t>{{1, 4}, {2, 1}, {3, 5}, {4, 2}, {5, 6}, {6, 3}}));
    EXPECT_EQ(r.cycles, (std::vector<std::vector<std::int64_t>>{{1, 4, 2}, {3, 5, 6}}));
    EXPECT_EQ(r.measures, (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));

    const ResidueMapModel two = residue_model(SphereMap::validate(2, 3, 2), 1);
    EXPECT_EQ(two.cycles, (std::vector<std::vector<std::int64_t>>{{1}}));
    EXPECT_EQ(two.measures, std::vector<Rational>{1});

    EXPECT_EQ(code_of([&] { residue_model(m, 7); }), ErrorCode::LevelTooLarge);
    EXPECT_EQ(code_of([] { residue_model(SphereMap::validate(101, 2, 101), 6); }), ErrorCode::LevelTooLarge);
}

TEST(ResidueModel, AgreesWithOracleAndRefines)
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(1, 400);
    for (Prime p : {2, 3, 5, 7}) {
        for (int trial = 0; trial < 4; ++trial) {
            Rational c(d(rng), d(rng));
            while (valuation(c, p) != 0)
                c = Rational(d(rng), d(rng));
            const Rational b = Rational(p) * Rational(d(rng) * (trial % 2 ? -1 : 1), p == 2 ? 2 * d(rng) + 1 : d(rng) * p + 1);
            const SphereMap m = SphereMap::validate(b, c, p);
            for (int l = 1; l <= 3; ++l) {
                const ResidueMapModel model = residue_model(m, l);
                const oracle::ResidueCheck check = oracle::exhaustive_residue_check(b, c, p, l);
                ASSERT_EQ(check.violations, 0u);
                ASSERT_EQ(model.table, check.table);
                std::set<std::int64_t> images;
                Rational total = 0;
                for (const auto& [x, y] : model.table)
                    images.insert(y);
                for (const Rational& mu : model.measures)
                    total += mu;
                ASSERT_EQ(images.size(), model.table.size());
                ASSERT_EQ(total, 1);
                if (l > 1) {
                    // each level-l cycle covers a whole level-(l-1) cycle a whole number of times
                    const ResidueMapModel coarse = residue_model(m, l - 1);
                    std::map<std::int64_t, std::size_t> coarse_len;
                    for (const auto& cyc : coarse.cycles)
                        for (std::int64_t x : cyc)
                            coarse_len[x] = cyc.size();
                    for (const auto& cyc : model.cycles)
                        ASSERT_EQ(cyc.size() % coarse_len.at(cyc[0] % coarse.modulus), 0u);
                }
            }
        }
    }
}

TEST(NonErgodicity, Examples)
{
    const SphereMap m = SphereMap::validate(7, 2, 7);
    const ErgodicityReport r = nonergodicity_witness(m, 3);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->level, 1);
    EXPECT_EQ(r.witness->cycle_length, 3);
    EXPECT_EQ(r.witness->invariant_set, (std::vector<std::int64_t>{1, 4, 2}));
    EXPECT_EQ(r.witness->measure, Rational(1, 2));
    EXPECT_EQ(r.regime, EscapeRegime::ConditionHolds);
    EXPECT_EQ(r.verdict, "NOT_ERGODIC");
    EXPECT_TRUE(witness_is_invariant(m, *r.witness));
    EXPECT_FALSE(r.two_adic_ball);

    const SphereMap two = SphereMap::validate(2, 3, 2);
    const ErgodicityReport t = nonergodicity_witness(two);
    ASSERT_TRUE(t.two_adic_ball);
    EXPECT_TRUE(t.two_adic_ball->invariant);
    EXPECT_EQ(t.two_adic_ball->unnormalized_measure, Rational(1, 2));
    EXPECT_TRUE(t.two_adic_ball->covers_sphere);
    ASSERT_TRUE(t.witness);
    EXPECT_EQ(t.witness->level, 2);
    EXPECT_EQ(t.witness->invariant_set, std::vector<std::int64_t>{1});
    EXPECT_EQ(t.witness->measure, Rational(1, 2));
    EXPECT_EQ(t.regime, EscapeRegime::ConditionFails);

    const ErgodicityReport s = nonergodicity_witness(SphereMap::validate(7, 6, 7));
    EXPECT_EQ(s.witness->cycle_length, 2);
    EXPECT_EQ(s.witness->measure, Rational(1, 3));

    // 2 generates the units mod 3 and mod 9: single cycles up to level 2
    EXPECT_EQ(code_of([] { nonergodicity_witness(SphereMap::validate(3, 2, 3), 1); }), ErrorCode::WitnessNotFoundAtLevel);
}

TEST(NonErgodicity, WitnessesAcrossMaps)
{
    for (Prime p : {2, 3, 5, 7, 11, 13}) {
        for (std::int64_t c = 1; c < 2 * p; ++c) {
            if (c % p == 0)
                continue;
            const SphereMap m = SphereMap::validate(p, c, p);
            ErgodicityReport r;
            try {
                r = nonergodicity_witness(m, 4);
            } catch (const Error& e) {
                ASSERT_EQ(e.code(), ErrorCode::WitnessNotFoundAtLevel);
                continue;
            }
            ASSERT_TRUE(r.witness);
            ASSERT_GT(r.witness->measure, 0);
            ASSERT_LT(r.witness->measure, 1);
            ASSERT_TRUE(witness_is_invariant(m, *r.witness));
        }
    }
}
