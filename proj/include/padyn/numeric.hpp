#pragma once

// Exact integer/rational plumbing shared by every module.

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace padyn {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Prime = std::int64_t;

inline constexpr int kDefaultPrecision = 32;

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_prime(Prime n)
{
    if (n < 2)
        return false;
    for (Prime d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

inline void require_prime(Prime p)
{
    if (!is_prime(p))
        throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
}

inline BigInt ipow(const BigInt& base, unsigned exponent)
{
    return boost::multiprecision::pow(base, exponent);
}

inline BigInt prime_power(Prime p, int k)
{
    return ipow(BigInt(p), static_cast<unsigned>(k));
}

/// Largest k with p^k | n; n must be nonzero. Strips the factor from n.
inline int strip_prime(BigInt& n, Prime p)
{
    int k = 0;
    const BigInt bp(p);
    while (true) {
        BigInt q, r;
        boost::multiprecision::divide_qr(n, bp, q, r);
        if (r != 0)
            break;
        n = std::move(q);
        ++k;
    }
    return k;
}

inline int valuation(BigInt n, Prime p)
{
    if (n == 0)
        throw Error(ErrorCode::ZeroInput, "valuation of zero");
    return strip_prime(n, p);
}

inline int valuation(const Rational& q, Prime p)
{
    if (q == 0)
        throw Error(ErrorCode::ZeroInput, "valuation of zero");
    return valuation(numerator_of(q), p) - valuation(denominator_of(q), p);
}

/// Non-negative remainder.
inline BigInt mod(const BigInt& a, const BigInt& m)
{
    BigInt r = a % m;
    if (r < 0)
        r += m;
    return r;
}

inline BigInt mod_inverse(const BigInt& a, const BigInt& m)
{
    BigInt old_r = mod(a, m), r = m;
    BigInt old_s = 1, s = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1)
        throw Error(ErrorCode::DivisionByZero, "no inverse modulo " + m.str());
    return mod(old_s, m);
}

/// q mod m for q whose denominator is coprime to m.
inline BigInt residue_of(const Rational& q, const BigInt& m)
{
    return mod(numerator_of(q) * mod_inverse(denominator_of(q), m), m);
}

inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m)
{
    return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
}

inline std::int64_t pow_mod(std::int64_t base, std::uint64_t e, std::int64_t m)
{
    std::int64_t result = 1 % m;
    base %= m;
    if (base < 0)
        base += m;
    while (e) {
        if (e & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return result;
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m)
{
    std::int64_t old_r = a % m, r = m, old_s = 1, s = 0;
    if (old_r < 0)
        old_r += m;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1)
        throw Error(ErrorCode::DivisionByZero, "no inverse of " + std::to_string(a) + " modulo " + std::to_string(m));
    old_s %= m;
    return old_s < 0 ? old_s + m : old_s;
}

/// "n" or "n/m", base 10, optional sign.
inline Rational parse_rational(std::string_view text)
{
    auto fail = [&] { return Error(ErrorCode::ParseError, "bad rational literal '" + std::string(text) + "'"); };
    auto parse_int = [&](std::string_view s, bool allow_sign) {
        if (s.empty())
            throw fail();
        std::size_t i = 0;
        if (allow_sign && (s[0] == '+' || s[0] == '-'))
            i = 1;
        if (i == s.size())
            throw fail();
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9')
                throw fail();
        BigInt v(std::string(s.substr(i)));
        return s[0] == '-' ? BigInt(-v) : v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text, true));
    const BigInt n = parse_int(text.substr(0, slash), true);
    const BigInt d = parse_int(text.substr(slash + 1), false);
    if (d == 0)
        throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(n, d);
}

inline std::string to_string(const Rational& q)
{
    if (denominator_of(q) == 1)
        return numerator_of(q).str();
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

inline std::size_t bit_length(const BigInt& n)
{
    if (n == 0)
        return 0;
    return boost::multiprecision::msb(boost::multiprecision::abs(n)) + 1;
}

} // namespace padyn
