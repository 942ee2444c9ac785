#pragma once

#include <ostream>
#include <compare>
#include <optional>
#include <string>

#include <boost/rational.hpp>

#include "numeric.hpp"

namespace padyn {

/// An element of the value group p^Q together with 0.
///
/// Radii and norms are never real numbers here: p^e is stored as the
/// rational exponent e, so ultrametric comparisons are exact.
class AbsValue {
public:
    using Exponent = boost::rational<long long>;

    static AbsValue zero(Prime p) { return AbsValue(p, std::nullopt); }
    static AbsValue one(Prime p) { return AbsValue(p, Exponent(0)); }
    static AbsValue power(Prime p, Exponent e) { return AbsValue(p, e); }
    /// |x|_p for valuation v, i.e. p^(-v).
    static AbsValue from_valuation(Prime p, Exponent v) { return AbsValue(p, -v); }

    Prime base() const { return base_; }
    bool is_zero() const { return !exponent_.has_value(); }

    Exponent exponent() const
    {
        if (!exponent_)
            throw Error(ErrorCode::ZeroInput, "exponent of the zero absolute value");
        return *exponent_;
    }

    /// Valuation of anything of this size (the negated exponent).
    Exponent valuation() const { return -exponent(); }

    friend AbsValue operator*(const AbsValue& x, const AbsValue& y)
    {
        check_base(x, y);
        if (x.is_zero() || y.is_zero())
            return zero(x.base_);
        return power(x.base_, *x.exponent_ + *y.exponent_);
    }

    friend AbsValue operator/(const AbsValue& x, const AbsValue& y)
    {
        check_base(x, y);
        if (y.is_zero())
            throw Error(ErrorCode::DivisionByZero, "division by the zero absolute value");
        if (x.is_zero())
            return zero(x.base_);
        return power(x.base_, *x.exponent_ - *y.exponent_);
    }

    AbsValue pow(Exponent k) const
    {
        if (is_zero()) {
            if (k <= Exponent(0))
                throw Error(ErrorCode::DivisionByZero, "non-positive power of zero");
            return *this;
        }
        return power(base_, *exponent_ * k);
    }

    AbsValue sqrt() const { return pow(Exponent(1, 2)); }

    friend std::strong_ordering operator<=>(const AbsValue& x, const AbsValue& y)
    {
        check_base(x, y);
        if (x.is_zero() || y.is_zero())
            return !x.is_zero() <=> !y.is_zero();
        if (*x.exponent_ < *y.exponent_)
            return std::strong_ordering::less;
        if (*y.exponent_ < *x.exponent_)
            return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend bool operator==(const AbsValue& x, const AbsValue& y) { return (x <=> y) == 0; }

    friend AbsValue max(const AbsValue& x, const AbsValue& y) { return x < y ? y : x; }

    /// "p^{e}" with e rendered as "n" or "n/m"; "0" for zero.
    std::string to_string() const
    {
        if (is_zero())
            return "0";
        return std::to_string(base_) + "^{" + exponent_string() + "}";
    }

    std::string exponent_string() const
    {
        const Exponent e = exponent();
        if (e.denominator() == 1)
            return std::to_string(e.numerator());
        return std::to_string(e.numerator()) + "/" + std::to_string(e.denominator());
    }

private:
    AbsValue(Prime p, std::optional<Exponent> e) : base_(p), exponent_(e) {}

    static void check_base(const AbsValue& x, const AbsValue& y)
    {
        if (x.base_ != y.base_)
            throw Error(ErrorCode::PrimeMismatch, "absolute values over different primes");
    }

    Prime base_;
    std::optional<Exponent> exponent_; // nullopt is the zero value
};

inline std::ostream& operator<<(std::ostream& os, const AbsValue& x) { return os << x.to_string(); }

/// Exact |q|_p of a rational.
inline AbsValue rational_norm(const Rational& q, Prime p)
{
    if (q == 0)
        return AbsValue::zero(p);
    return AbsValue::from_valuation(p, valuation(q, p));
}

} // namespace padyn
