#pragma once

#include <ostream>
#include <algorithm>
#include <climits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "abs_value.hpp"
#include "numeric.hpp"

namespace padyn {

/// An element of Q_p known to a finite number of significant digits.
///
/// A nonzero value is p^valuation * unit where unit is known modulo
/// p^precision and is not divisible by p, so its first base-p digit is
/// nonzero. A value whose known digits all cancelled is "bottom": it is
/// only known to be divisible by p^absolute_precision(). Zero coming from
/// an exact rational input is bottom with absolute precision kExact.
///
/// Every operation returns only digits that agree with the
/// infinite-precision answer.
class PAdic {
public:
    static constexpr int kExact = INT_MAX / 4;

    static PAdic zero(Prime p, int absolute_precision = kExact)
    {
        PAdic z(p);
        z.bottom_ = true;
        z.precision_ = std::min(absolute_precision, kExact);
        return z;
    }

    static PAdic from_rational(const Rational& q, Prime p, int precision)
    {
        if (precision < 1)
            throw Error(ErrorCode::InvalidArgument, "precision must be positive");
        if (q == 0)
            return zero(p);
        BigInt num = numerator_of(q), den = denominator_of(q);
        const int v = strip_prime(num, p) - strip_prime(den, p);
        const BigInt modulus = prime_power(p, precision);
        return from_unit(p, v, mod(num * mod_inverse(den, modulus), modulus), precision);
    }

    static PAdic from_integer(long long n, Prime p, int precision) { return from_rational(Rational(n), p, precision); }

    /// digits[0] must be nonzero; least significant first.
    static PAdic from_digits(Prime p, int valuation, const std::vector<int>& digits)
    {
        if (digits.empty() || digits.front() == 0)
            throw Error(ErrorCode::InvalidArgument, "canonical digits must start with a nonzero digit");
        BigInt unit = 0;
        for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
            if (*it < 0 || *it >= p)
                throw Error(ErrorCode::InvalidArgument, "digit out of range");
            unit = unit * p + *it;
        }
        return from_unit(p, valuation, std::move(unit), static_cast<int>(digits.size()));
    }

    /// p^valuation * unit with unit coprime to p, known modulo p^precision.
    static PAdic from_unit(Prime p, int valuation, BigInt unit, int precision)
    {
        PAdic x(p);
        x.bottom_ = false;
        x.valuation_ = valuation;
        x.precision_ = precision;
        x.unit_ = mod(unit, prime_power(p, precision));
        if (x.unit_ % p == 0)
            throw Error(ErrorCode::InvalidArgument, "unit part divisible by p");
        return x;
    }

    /// Parses "d0.d1 d2 ... * p^v" (or "d0 * p^v"); "0" is exact zero and
    /// "O(p^N)" is zero to absolute precision N.
    static PAdic parse(std::string_view text, std::optional<Prime> expected_prime = std::nullopt);

    Prime prime() const { return p_; }
    bool is_bottom() const { return bottom_; }
    bool is_exact_zero() const { return bottom_ && precision_ >= kExact; }

    std::optional<int> valuation() const
    {
        if (bottom_)
            return std::nullopt;
        return valuation_;
    }

    /// Significant digits; 0 for bottom.
    int precision() const { return bottom_ ? 0 : precision_; }

    /// Known modulo p^absolute_precision().
    int absolute_precision() const { return bottom_ ? precision_ : valuation_ + precision_; }

    const BigInt& unit() const { return unit_; }

    std::vector<int> digits() const
    {
        std::vector<int> out;
        if (bottom_)
            return out;
        out.reserve(static_cast<std::size_t>(precision_));
        BigInt u = unit_;
        for (int i = 0; i < precision_; ++i) {
            BigInt q, r;
            boost::multiprecision::divide_qr(u, BigInt(p_), q, r);
            out.push_back(r.convert_to<int>());
            u = std::move(q);
        }
        return out;
    }

    AbsValue norm() const
    {
        if (bottom_)
            return AbsValue::zero(p_);
        return AbsValue::from_valuation(p_, valuation_);
    }

    /// The canonical rational representative p^valuation * unit.
    Rational representative() const
    {
        if (bottom_)
            return 0;
        if (valuation_ >= 0)
            return Rational(unit_ * prime_power(p_, valuation_));
        return Rational(unit_, prime_power(p_, -valuation_));
    }

    /// Keeps at most n significant digits.
    PAdic with_precision(int n) const
    {
        if (bottom_ || n >= precision_)
            return *this;
        if (n < 1)
            return zero(p_, valuation_ + std::max(n, 0));
        return from_unit(p_, valuation_, unit_, n);
    }

    PAdic operator-() const
    {
        if (bottom_)
            return *this;
        PAdic r = *this;
        r.unit_ = prime_power(p_, precision_) - unit_;
        return r;
    }

    friend PAdic operator+(const PAdic& x, const PAdic& y)
    {
        check_prime(x, y);
        const int abs = std::min(x.absolute_precision(), y.absolute_precision());
        if (x.bottom_ && y.bottom_)
            return zero(x.p_, abs);
        if (x.bottom_)
            return from_scaled(y.p_, y.valuation_, y.unit_, abs);
        if (y.bottom_)
            return from_scaled(x.p_, x.valuation_, x.unit_, abs);
        const int v = std::min(x.valuation_, y.valuation_);
        BigInt s = 0;
        for (const PAdic* t : {&x, &y}) {
            const int shift = t->valuation_ - v;
            if (shift < abs - v)
                s += t->unit_ * prime_power(x.p_, shift);
        }
        return from_scaled(x.p_, v, std::move(s), abs);
    }

    friend PAdic operator-(const PAdic& x, const PAdic& y) { return x + (-y); }

    friend PAdic operator*(const PAdic& x, const PAdic& y)
    {
        check_prime(x, y);
        if (x.bottom_ && y.bottom_)
            return zero(x.p_, sat_add(x.precision_, y.precision_));
        if (x.bottom_)
            return zero(x.p_, sat_add(x.precision_, y.valuation_));
        if (y.bottom_)
            return zero(x.p_, sat_add(y.precision_, x.valuation_));
        const int n = std::min(x.precision_, y.precision_);
        return from_unit(x.p_, x.valuation_ + y.valuation_, x.unit_ * y.unit_, n);
    }

    PAdic inverse() const
    {
        if (bottom_)
            throw Error(ErrorCode::DivisionByZero, "inverse of a value indistinguishable from zero");
        return from_unit(p_, -valuation_, mod_inverse(unit_, prime_power(p_, precision_)), precision_);
    }

    friend PAdic operator/(const PAdic& x, const PAdic& y) { return x * y.inverse(); }

    /// Multiplication by an exact rational, without losing precision.
    PAdic scaled(const Rational& q) const
    {
        if (q == 0)
            return zero(p_);
        if (bottom_)
            return zero(p_, sat_add(precision_, padyn::valuation(q, p_)));
        return *this * from_rational(q, p_, precision_);
    }

    /// The difference is indistinguishable from zero at the available precision.
    bool congruent(const PAdic& other) const { return (*this - other).is_bottom(); }

    friend bool operator==(const PAdic& x, const PAdic& y)
    {
        return x.p_ == y.p_ && x.bottom_ == y.bottom_ && x.precision_ == y.precision_
            && (x.bottom_ || (x.valuation_ == y.valuation_ && x.unit_ == y.unit_));
    }

    std::string to_string() const
    {
        if (is_exact_zero())
            return "0";
        if (bottom_)
            return "O(" + std::to_string(p_) + "^" + std::to_string(precision_) + ")";
        const auto ds = digits();
        std::ostringstream os;
        os << ds[0];
        for (std::size_t i = 1; i < ds.size(); ++i)
            os << (i == 1 ? "." : " ") << ds[i];
        os << " * " << p_ << "^" << valuation_;
        return os.str();
    }

private:
    explicit PAdic(Prime p) : p_(p) {}

    static int sat_add(int a, int b)
    {
        if (a >= kExact || b >= kExact)
            return kExact;
        return std::min(a + b, kExact);
    }

    static void check_prime(const PAdic& x, const PAdic& y)
    {
        if (x.p_ != y.p_)
            throw Error(ErrorCode::PrimeMismatch, "operands over Q_" + std::to_string(x.p_) + " and Q_" + std::to_string(y.p_));
    }

    // p^v * s known modulo p^abs.
    static PAdic from_scaled(Prime p, int v, BigInt s, int abs)
    {
        if (abs <= v)
            return zero(p, abs);
        s = mod(s, prime_power(p, abs - v));
        if (s == 0)
            return zero(p, abs);
        const int k = strip_prime(s, p);
        return from_unit(p, v + k, std::move(s), abs - v - k);
    }

    Prime p_;
    bool bottom_ = true;
    int valuation_ = 0;
    int precision_ = kExact; // absolute bound while bottom_
    BigInt unit_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const PAdic& x) { return os << x.to_string(); }

inline PAdic PAdic::parse(std::string_view text, std::optional<Prime> expected_prime)
{
    auto fail = [&](const std::string& why) {
        return Error(ErrorCode::ParseError, "bad p-adic literal '" + std::string(text) + "': " + why);
    };
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ')
            s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ')
            s.remove_suffix(1);
        return s;
    };
    auto to_int = [&](std::string_view s) {
        s = trim(s);
        if (s.empty())
            throw fail("missing number");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            throw fail("missing number");
        long long v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw fail("unexpected character");
            v = v * 10 + (s[i] - '0');
            if (v > INT_MAX)
                throw fail("number too large");
        }
        return s[0] == '-' ? -v : v;
    };
    auto check = [&](Prime p) {
        require_prime(p);
        if (expected_prime && *expected_prime != p)
            throw Error(ErrorCode::PrimeMismatch, "literal is over Q_" + std::to_string(p));
        return p;
    };

    const std::string_view body = trim(text);
    if (body == "0") {
        if (!expected_prime)
            throw fail("prime unknown for exact zero");
        return zero(*expected_prime);
    }
    if (body.starts_with("O(") && body.ends_with(")")) {
        const auto inner = body.substr(2, body.size() - 3);
        const auto caret = inner.find('^');
        if (caret == std::string_view::npos)
            throw fail("expected p^N");
        return zero(check(to_int(inner.substr(0, caret))), static_cast<int>(to_int(inner.substr(caret + 1))));
    }
    const auto star = body.find('*');
    if (star == std::string_view::npos)
        throw fail("expected '* p^v'");
    const auto power = trim(body.substr(star + 1));
    const auto caret = power.find('^');
    if (caret == std::string_view::npos)
        throw fail("expected p^v");
    const Prime p = check(to_int(power.substr(0, caret)));
    const int v = static_cast<int>(to_int(power.substr(caret + 1)));

    std::vector<int> digits;
    std::string mantissa(trim(body.substr(0, star)));
    std::replace(mantissa.begin(), mantissa.end(), '.', ' ');
    std::istringstream is(mantissa);
    std::string tok;
    while (is >> tok) {
        const long long d = to_int(tok);
        if (d < 0 || d >= p)
            throw fail("digit out of range");
        digits.push_back(static_cast<int>(d));
    }
    if (digits.empty() || digits[0] == 0)
        throw fail("leading digit must be nonzero");
    return from_digits(p, v, digits);
}

// Free-function spellings of the core operations.

inline PAdic from_rational(const Rational& q, Prime p, int precision = kDefaultPrecision)
{
    return PAdic::from_rational(q, p, precision);
}
inline PAdic add(const PAdic& x, const PAdic& y) { return x + y; }
inline PAdic mul(const PAdic& x, const PAdic& y) { return x * y; }
inline PAdic invert(const PAdic& x) { return x.inverse(); }
inline AbsValue norm(const PAdic& x) { return x.norm(); }

/// add() that refuses to lose every known digit of nonzero operands.
inline PAdic add_checked(const PAdic& x, const PAdic& y)
{
    PAdic s = x + y;
    if (s.is_bottom() && !s.is_exact_zero() && !(x.is_bottom() && y.is_bottom()))
        throw Error(ErrorCode::PrecisionExhausted,
            "cancellation consumed all " + std::to_string(s.absolute_precision()) + " known digits");
    return s;
}

} // namespace padyn
