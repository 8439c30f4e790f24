#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>

namespace maksarum {

// Expression templates are off so that `auto` and implicit conversions
// behave like ordinary value types.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>, boost::multiprecision::et_off>;

Integer gcd(const Integer& a, const Integer& b);
Integer pow_int(const Integer& base, unsigned exponent);
Integer pow60(unsigned exponent);
// Decimal digits only; leading zeros are ignored rather than read as octal.
Integer parse_integer(std::string_view digits);

// True iff n has no prime factor other than 2, 3 and 5.
bool is_regular(const Integer& n);

// Exact square root; throws not_a_perfect_square otherwise.
Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

// Deterministic for every value the toolkit produces (Miller-Rabin with a
// fixed base set that is exact below 3.3e24, trial division below that).
bool is_prime(const Integer& n);

// Nonnegative reduced fraction.  Subtraction that would go negative throws.
class ExactRatio {
public:
    ExactRatio() = default;
    ExactRatio(const Integer& n);  // NOLINT: integers are ratios
    ExactRatio(long long n) : ExactRatio(Integer(n)) {}  // NOLINT
    ExactRatio(const Integer& numerator, const Integer& denominator);

    Integer numerator() const { return boost::multiprecision::numerator(value_); }
    Integer denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return denominator() == 1; }

    // Floor of the value.
    Integer whole() const { return numerator() / denominator(); }

    friend ExactRatio operator+(const ExactRatio& a, const ExactRatio& b);
    friend ExactRatio operator-(const ExactRatio& a, const ExactRatio& b);
    friend ExactRatio operator*(const ExactRatio& a, const ExactRatio& b);
    friend ExactRatio operator/(const ExactRatio& a, const ExactRatio& b);

    ExactRatio& operator+=(const ExactRatio& o) { return *this = *this + o; }
    ExactRatio& operator-=(const ExactRatio& o) { return *this = *this - o; }
    ExactRatio& operator*=(const ExactRatio& o) { return *this = *this * o; }
    ExactRatio& operator/=(const ExactRatio& o) { return *this = *this / o; }

    friend bool operator==(const ExactRatio& a, const ExactRatio& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b);

    // "n" or "n/d".
    std::string str() const;
    double to_double() const;

private:
    explicit ExactRatio(Rational v) : value_(std::move(v)) {}

    Rational value_{0};
};

ExactRatio parse_ratio(const std::string& text);

// Fixed-point decimal rendering with exactly `digits` places, truncated
// toward zero.
std::string to_decimal(const ExactRatio& value, unsigned digits);

// Same, but rounded half up and with trailing zeros removed, the way
// floating tables usually print (0.5625, 0.983402777777778).
std::string to_decimal_rounded(const ExactRatio& value, unsigned digits);

// Smallest n with value * 60^n integral, or -1 if no such n exists.
int sexagesimal_places(const ExactRatio& value);

}  // namespace maksarum
