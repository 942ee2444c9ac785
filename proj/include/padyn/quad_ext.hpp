#pragma once

// Square classes, Hensel square roots, and the quadratic extensions
// Q_p(sqrt d) that hold the fixed points of a Mobius map.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "padic.hpp"

namespace padyn {

enum class SquareTag { SquareInQp, Unramified, Ramified, RamifiedTwisted };

constexpr std::string_view square_tag_name(SquareTag t) noexcept
{
    switch (t) {
    case SquareTag::SquareInQp: return "SQUARE_IN_QP";
    case SquareTag::Unramified: return "UNRAMIFIED";
    case SquareTag::Ramified: return "RAMIFIED";
    case SquareTag::RamifiedTwisted: return "RAMIFIED_TWISTED";
    }
    return "?";
}

/// Class of x in Q_p^* / (Q_p^*)^2, named by a fixed integer representative d.
///
/// Odd p: d is one of 1, n, p, n*p with n the smallest quadratic
/// non-residue. p = 2 has eight classes; d ranges over
/// {1, 5} (unramified), {3, 7} and {2, 6, 10, 14} (ramified).
struct SquareClass {
    SquareTag tag = SquareTag::SquareInQp;
    long long representative = 1;
    Prime prime = 2;

    bool is_square() const { return tag == SquareTag::SquareInQp; }
    /// Valuation of the representative: 0 or 1.
    int representative_valuation() const { return representative % prime == 0 ? 1 : 0; }

    friend bool operator==(const SquareClass&, const SquareClass&) = default;
};

inline long long smallest_nonresidue(Prime p)
{
    if (p == 2)
        return 5;
    for (long long n = 2;; ++n)
        if (pow_mod(n, static_cast<std::uint64_t>((p - 1) / 2), p) == p - 1)
            return n;
}

namespace detail {

    // v = valuation, r = unit residue (mod p for odd p, mod 8 for p = 2).
    inline SquareClass classify(int v, long long r, Prime p)
    {
        const bool even = (v % 2) == 0;
        if (p == 2) {
            if (!even)
                return {r == 1 || r == 5 ? SquareTag::Ramified : SquareTag::RamifiedTwisted, 2 * r, p};
            if (r == 1)
                return {SquareTag::SquareInQp, 1, p};
            if (r == 5)
                return {SquareTag::Unramified, 5, p};
            return {SquareTag::RamifiedTwisted, r, p};
        }
        const bool residue = pow_mod(r, static_cast<std::uint64_t>((p - 1) / 2), p) == 1;
        const long long n = smallest_nonresidue(p);
        if (even)
            return residue ? SquareClass{SquareTag::SquareInQp, 1, p} : SquareClass{SquareTag::Unramified, n, p};
        return residue ? SquareClass{SquareTag::Ramified, p, p} : SquareClass{SquareTag::RamifiedTwisted, n * p, p};
    }

    // Square root of a nonzero quadratic residue mod odd p.
    inline long long sqrt_mod_prime(long long a, Prime p)
    {
        a %= p;
        if (p % 4 == 3)
            return pow_mod(a, static_cast<std::uint64_t>((p + 1) / 4), p);
        // Tonelli-Shanks
        long long q = p - 1;
        int s = 0;
        while (q % 2 == 0) {
            q /= 2;
            ++s;
        }
        const long long z = smallest_nonresidue(p);
        long long m = s;
        long long c = pow_mod(z, q, p);
        long long t = pow_mod(a, q, p);
        long long r = pow_mod(a, (q + 1) / 2, p);
        while (t != 1) {
            long long i = 0, t2 = t;
            while (t2 != 1) {
                t2 = mul_mod(t2, t2, p);
                ++i;
            }
            long long b = c;
            for (long long j = 0; j < m - i - 1; ++j)
                b = mul_mod(b, b, p);
            m = i;
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            r = mul_mod(r, b, p);
        }
        return r;
    }

    // Digit-lexicographic comparison, least significant digit first.
    inline bool digits_less(const PAdic& x, const PAdic& y)
    {
        const auto dx = x.digits(), dy = y.digits();
        return std::lexicographical_compare(dx.begin(), dx.end(), dy.begin(), dy.end());
    }

} // namespace detail

inline SquareClass square_class(const Rational& q, Prime p)
{
    if (q == 0)
        throw Error(ErrorCode::ZeroInput, "square class of zero");
    const int v = valuation(q, p);
    Rational unit = q;
    if (v > 0)
        unit /= Rational(prime_power(p, v));
    else if (v < 0)
        unit *= Rational(prime_power(p, -v));
    const BigInt m = p == 2 ? BigInt(8) : BigInt(p);
    return detail::classify(v, residue_of(unit, m).convert_to<long long>(), p);
}

inline SquareClass square_class(const PAdic& x)
{
    if (x.is_bottom())
        throw Error(ErrorCode::ZeroInput, "square class of a value indistinguishable from zero");
    const Prime p = x.prime();
    if (p == 2 && x.precision() < 3)
        throw Error(ErrorCode::PrecisionExhausted, "2-adic square class needs three significant digits");
    const BigInt m = p == 2 ? BigInt(8) : BigInt(p);
    return detail::classify(*x.valuation(), mod(x.unit(), m).convert_to<long long>(), p);
}

/// Square root in Q_p by Hensel lifting. Of the two roots, returns the one
/// whose digit sequence is smaller (first digit, then the next, ...).
/// For p = 2 one significant digit is lost.
inline PAdic hensel_sqrt(const PAdic& x)
{
    const Prime p = x.prime();
    if (x.is_bottom())
        return PAdic::zero(p, x.is_exact_zero() ? PAdic::kExact : x.absolute_precision() / 2);
    if (!square_class(x).is_square())
        throw Error(ErrorCode::NotASquare, x.to_string() + " is not a square in Q_" + std::to_string(p));
    const int n = x.precision();
    const int half_v = *x.valuation() / 2;
    const BigInt& u = x.unit();

    BigInt root;
    int root_precision = n;
    if (p == 2) {
        root_precision = n - 1;
        root = 1;
        for (int k = 3; k < n; ++k) {
            const BigInt modulus = prime_power(2, k + 1);
            if (mod(root * root - u, modulus) != 0)
                root += prime_power(2, k - 1);
        }
    } else {
        root = detail::sqrt_mod_prime(mod(u, BigInt(p)).convert_to<long long>(), p);
        for (int k = 1; k < n;) {
            k = std::min(2 * k, n);
            const BigInt modulus = prime_power(p, k);
            root = mod(root - (root * root - u) * mod_inverse(2 * root, modulus), modulus);
        }
    }
    const PAdic r = PAdic::from_unit(p, half_v, root, root_precision);
    const PAdic neg = -r;
    return detail::digits_less(neg, r) ? neg : r;
}

inline PAdic hensel_sqrt(const Rational& q, Prime p, int precision = kDefaultPrecision)
{
    return hensel_sqrt(PAdic::from_rational(q, p, precision));
}

/// Exact square root in Q, if q is the square of a rational.
inline std::optional<Rational> rational_sqrt(const Rational& q)
{
    if (q < 0)
        return std::nullopt;
    const BigInt n = numerator_of(q), d = denominator_of(q);
    const BigInt rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(d);
    if (rn * rn != n || rd * rd != d)
        return std::nullopt;
    return Rational(rn, rd);
}

/// u + w*sqrt(d) in Q_p(sqrt d), with d the representative of a square class.
///
/// Elements of Q_p itself have w equal to exact zero and may be combined
/// with elements of any one extension.
class ExtScalar {
public:
    static ExtScalar from_base(PAdic u)
    {
        const Prime p = u.prime();
        return ExtScalar(std::move(u), PAdic::zero(p), SquareClass{SquareTag::SquareInQp, 1, p});
    }

    static ExtScalar from_rational(const Rational& q, Prime p, int precision = kDefaultPrecision)
    {
        return from_base(PAdic::from_rational(q, p, precision));
    }

    ExtScalar(PAdic u, PAdic w, SquareClass cls) : u_(std::move(u)), w_(std::move(w)), class_(cls)
    {
        if (u_.prime() != w_.prime() || u_.prime() != class_.prime)
            throw Error(ErrorCode::PrimeMismatch, "extension components over different primes");
        if (class_.is_square() && !w_.is_exact_zero()) {
            u_ = u_ + w_;
            w_ = PAdic::zero(u_.prime());
        }
    }

    Prime prime() const { return u_.prime(); }
    const PAdic& u() const { return u_; }
    const PAdic& w() const { return w_; }
    const SquareClass& square_class() const { return class_; }
    long long d() const { return class_.representative; }
    bool in_base_field() const { return w_.is_exact_zero(); }

    ExtScalar conjugate() const { return ExtScalar(u_, -w_, class_); }

    /// u^2 - d w^2, the Galois norm down to Q_p.
    PAdic galois_norm() const
    {
        if (in_base_field())
            return u_ * u_;
        return u_ * u_ - (w_ * w_).scaled(Rational(d()));
    }

    /// |u + w sqrt d| = |u^2 - d w^2|^(1/2).
    AbsValue norm() const
    {
        if (in_base_field())
            return u_.norm();
        if (u_.is_bottom() && w_.is_bottom())
            return AbsValue::zero(prime());
        const PAdic g = galois_norm();
        if (g.is_bottom())
            throw Error(ErrorCode::PrecisionExhausted, "Galois norm of " + to_string() + " cancelled completely");
        return g.norm().sqrt();
    }

    /// Absolute precision in units of 1/2: the element is known modulo p^(h/2).
    int absolute_precision_halves() const
    {
        const auto doubled = [](int a) { return a >= PAdic::kExact / 2 ? PAdic::kExact : 2 * a; };
        const int from_u = doubled(u_.absolute_precision());
        if (in_base_field())
            return from_u;
        const int from_w = doubled(w_.absolute_precision());
        return std::min(from_u, from_w >= PAdic::kExact ? from_w : from_w + class_.representative_valuation());
    }

    /// Every known digit is zero.
    bool is_indistinguishable_from_zero() const { return u_.is_bottom() && w_.is_bottom(); }

    /// Zero modulo p^n (n digits of absolute precision at least).
    bool is_zero_to(int n) const { return is_indistinguishable_from_zero() && absolute_precision_halves() >= 2 * n; }

    /// Significant digits (rounded down); kExact for exact zero.
    int relative_precision() const
    {
        if (is_indistinguishable_from_zero())
            return 0;
        const auto v2 = -2 * norm().exponent();
        return static_cast<int>((absolute_precision_halves() - v2.numerator() / v2.denominator()) / 2);
    }

    ExtScalar operator-() const { return ExtScalar(-u_, -w_, class_); }

    friend ExtScalar operator+(const ExtScalar& x, const ExtScalar& y)
    {
        return ExtScalar(x.u_ + y.u_, x.w_ + y.w_, common_class(x, y));
    }

    friend ExtScalar operator-(const ExtScalar& x, const ExtScalar& y) { return x + (-y); }

    friend ExtScalar operator*(const ExtScalar& x, const ExtScalar& y)
    {
        const SquareClass cls = common_class(x, y);
        const PAdic u = x.u_ * y.u_ + (x.w_ * y.w_).scaled(Rational(cls.representative));
        const PAdic w = x.u_ * y.w_ + x.w_ * y.u_;
        return ExtScalar(u, w, cls);
    }

    ExtScalar inverse() const
    {
        if (is_indistinguishable_from_zero())
            throw Error(ErrorCode::DivisionByZero, "inverse of a value indistinguishable from zero");
        if (in_base_field())
            return from_base(u_.inverse());
        const PAdic g = galois_norm();
        if (g.is_bottom())
            throw Error(ErrorCode::PrecisionExhausted, "Galois norm of " + to_string() + " cancelled completely");
        const PAdic gi = g.inverse();
        return ExtScalar(u_ * gi, -(w_ * gi), class_);
    }

    friend ExtScalar operator/(const ExtScalar& x, const ExtScalar& y) { return x * y.inverse(); }

    ExtScalar scaled(const Rational& q) const { return ExtScalar(u_.scaled(q), w_.scaled(q), class_); }

    /// "u + w*sqrt(d)"; elements of Q_p print as u alone.
    std::string to_string() const
    {
        if (in_base_field())
            return u_.to_string();
        return u_.to_string() + " + " + w_.to_string() + "*sqrt(" + std::to_string(d()) + ")";
    }

private:
    static SquareClass common_class(const ExtScalar& x, const ExtScalar& y)
    {
        if (x.prime() != y.prime())
            throw Error(ErrorCode::PrimeMismatch, "extension scalars over different primes");
        if (x.in_base_field())
            return y.class_;
        if (y.in_base_field())
            return x.class_;
        if (x.class_.representative != y.class_.representative)
            throw Error(ErrorCode::ClassMismatch,
                "Q_p(sqrt " + std::to_string(x.d()) + ") vs Q_p(sqrt " + std::to_string(y.d()) + ")");
        return x.class_;
    }

    PAdic u_;
    PAdic w_;
    SquareClass class_;
};

inline std::ostream& operator<<(std::ostream& os, const ExtScalar& x) { return os << x.to_string(); }

enum class ExtOp { Add, Mul, InvertLeft };

inline ExtScalar ext_arith(const ExtScalar& x, const ExtScalar& y, ExtOp op)
{
    switch (op) {
    case ExtOp::Add: return x + y;
    case ExtOp::Mul: return x * y;
    case ExtOp::InvertLeft:
        if (!y.in_base_field() && !x.in_base_field() && x.d() != y.d())
            throw Error(ErrorCode::ClassMismatch, "operands in different extensions");
        return x.inverse();
    }
    return x;
}

inline AbsValue ext_norm(const ExtScalar& x) { return x.norm(); }

/// A square root of x, in Q_p when possible and otherwise in Q_p(sqrt d)
/// for d the representative of x's square class.
inline ExtScalar sqrt_in_extension(const PAdic& x)
{
    const Prime p = x.prime();
    if (x.is_bottom())
        return ExtScalar::from_base(hensel_sqrt(x));
    const SquareClass cls = square_class(x);
    if (cls.is_square())
        return ExtScalar::from_base(hensel_sqrt(x));
    const PAdic s = hensel_sqrt(x.scaled(Rational(1) / Rational(cls.representative)));
    return ExtScalar(PAdic::zero(p), s, cls);
}

inline ExtScalar sqrt_in_extension(const Rational& q, Prime p, int precision = kDefaultPrecision)
{
    return sqrt_in_extension(PAdic::from_rational(q, p, precision));
}

} // namespace padyn
