#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>

namespace s121 {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact dollar amount. Always a rational in lowest terms with positive
/// denominator (the backing type keeps it canonical). No floating point is
/// involved at any point; rounding happens only when a value is serialized.
class Money {
public:
    Money() = default;

    static Money dollars(long long whole) { return Money(Rational(whole)); }

    static Money from_rational(Rational value) { return Money(std::move(value)); }

    /// Exact value in dollars.
    const Rational& value() const { return value_; }

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    /// Whole dollars, rounded half away from zero. This is the only rounding
    /// step in the entire engine and it is applied at serialization only.
    BigInt rounded_dollars() const {
        BigInt num = numerator();
        BigInt den = denominator();
        bool negative = num < 0;
        BigInt mag = negative ? BigInt(-num) : num;
        BigInt whole = mag / den;
        BigInt rem = mag % den;
        if (2 * rem >= den) ++whole;
        return negative ? BigInt(-whole) : whole;
    }

    long long rounded_dollars_i64() const {
        return rounded_dollars().convert_to<long long>();
    }

    bool is_zero() const { return value_.is_zero(); }

    Money operator+(const Money& other) const { return Money(value_ + other.value_); }
    Money operator-(const Money& other) const { return Money(value_ - other.value_); }
    Money operator-() const { return Money(-value_); }

    /// Exact scaling, e.g. proration by a ratio of period lengths.
    Money operator*(const Rational& ratio) const { return Money(value_ * ratio); }

    bool operator==(const Money& other) const = default;
    std::strong_ordering operator<=>(const Money& other) const {
        if (value_ < other.value_) return std::strong_ordering::less;
        if (value_ > other.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    explicit Money(Rational value) : value_(std::move(value)) {}

    Rational value_{0};
};

inline const Money& min(const Money& a, const Money& b) { return b < a ? b : a; }

/// "1234567" -> "1,234,567". Human tables only; machine formats never group.
std::string group_thousands(const BigInt& whole);

}  // namespace s121
