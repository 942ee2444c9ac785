#pragma once

// Ground-truth engines built only on exact rationals and residue
// enumeration. Nothing here touches PAdic or ExtScalar, so the analytic
// modules can be scored against it.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "abs_value.hpp"
#include "numeric.hpp"

namespace padyn::oracle {

inline constexpr std::size_t kMaxCoefficientBits = 1'000'000;
inline constexpr std::int64_t kMaxResidueModulus = 1'000'000;

/// (x + a) / (b x + c), exactly. Throws Pole when b x + c = 0.
inline Rational apply_mobius(const Rational& a, const Rational& b, const Rational& c, const Rational& x)
{
    const Rational den = b * x + c;
    if (den == 0)
        throw Error(ErrorCode::Pole, "x = " + to_string(x) + " is the pole");
    return (x + a) / den;
}

/// x_0, x_1, ..., x_n with x_{k+1} = (x_k + a)/(b x_k + c).
inline std::vector<Rational> exact_iterate(const Rational& a, const Rational& b, const Rational& c, const Rational& x0, int n)
{
    if (n < 0)
        throw Error(ErrorCode::InvalidArgument, "negative iteration count");
    std::vector<Rational> orbit{x0};
    orbit.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k < n; ++k) {
        const Rational& x = orbit.back();
        const Rational den = b * x + c;
        if (den == 0)
            throw Error(ErrorCode::PoleHit, "iterate " + std::to_string(k) + " hits the pole");
        Rational next = (x + a) / den;
        if (bit_length(numerator_of(next)) > kMaxCoefficientBits || bit_length(denominator_of(next)) > kMaxCoefficientBits)
            throw Error(ErrorCode::CoefficientBlowup, "iterate " + std::to_string(k + 1) + " exceeds 10^6 bits");
        orbit.push_back(std::move(next));
    }
    return orbit;
}

/// |x|_p computed by factoring powers of p out of numerator and denominator.
inline AbsValue norm(const Rational& x, Prime p) { return rational_norm(x, p); }

/// (B, C) with f^N(x) = x / (B x + C) for f(x) = x/(b x + c), by composing
/// the coefficient pairs N times.
inline std::pair<Rational, Rational> composed_coefficients(const Rational& b, const Rational& c, int n)
{
    Rational big_b = 0, big_c = 1; // identity: x / (0 x + 1)
    for (int k = 0; k < n; ++k) {
        // f(x/(Bx+C)) = x / ((b + c B) x + c C)
        big_b = b + c * big_b;
        big_c = c * big_c;
    }
    return {big_b, big_c};
}

/// Same for the inverse map f^{-1}(x) = x / (-(b/c) x + 1/c).
inline std::pair<Rational, Rational> composed_inverse_coefficients(const Rational& b, const Rational& c, int n)
{
    return composed_coefficients(-b / c, Rational(1) / c, n);
}

/// Taylor coefficients f_1..f_n of f(x0 + t) = sum f_k t^k, by power-series
/// division of (x0 + a + t) by (b x0 + c + b t).
inline std::vector<Rational> taylor_coefficients(const Rational& a, const Rational& b, const Rational& c, const Rational& x0, int n)
{
    const Rational d0 = b * x0 + c;
    if (d0 == 0)
        throw Error(ErrorCode::Pole, "expansion point is the pole");
    std::vector<Rational> q{(x0 + a) / d0};
    for (int k = 1; k <= n; ++k) {
        const Rational numerator_k = k == 1 ? Rational(1) : Rational(0);
        q.push_back((numerator_k - b * q.back()) / d0);
    }
    q.erase(q.begin());
    return q;
}

struct ResidueCheck {
    Prime prime = 2;
    int level = 1;
    std::map<std::int64_t, std::int64_t> table; // unit residue mod p^l -> image mod p^l
    std::size_t violations = 0;                  // balls whose lifts disagree mod p^l
    std::size_t evaluated = 0;
};

/// Evaluates f(x) = x/(bx + c) exactly on every unit residue mod p^(l+2)
/// and checks that all lifts of each level-l ball land in one level-l ball.
inline ResidueCheck exhaustive_residue_check(const Rational& b, const Rational& c, Prime p, int level)
{
    require_prime(p);
    if (level < 1)
        throw Error(ErrorCode::InvalidArgument, "level must be positive");
    BigInt pl = prime_power(p, level);
    if (pl > kMaxResidueModulus)
        throw Error(ErrorCode::LevelTooLarge, "p^l exceeds 10^6");
    const std::int64_t modulus = pl.convert_to<std::int64_t>();
    const std::int64_t fine = modulus * p * p;

    ResidueCheck out;
    out.prime = p;
    out.level = level;
    for (std::int64_t x = 1; x < fine; ++x) {
        if (x % p == 0)
            continue;
        const Rational image = apply_mobius(0, b, c, Rational(x));
        if (valuation(image, p) != 0)
            throw Error(ErrorCode::NotOnSphere, "image of a unit is not a unit");
        const std::int64_t r = residue_of(image, pl).convert_to<std::int64_t>();
        const auto [it, inserted] = out.table.emplace(x % modulus, r);
        if (!inserted && it->second != r)
            ++out.violations;
        ++out.evaluated;
    }
    return out;
}

} // namespace padyn::oracle
