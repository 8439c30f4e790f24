#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "maksarum/exact.hpp"

namespace maksarum {

// A finite nonnegative base-60 numeral.  Always kept normalized: no leading
// zero digit in front of a nonzero integer part, no trailing zero after the
// radix, and zero is the single digit 0.
class Sexagesimal {
public:
    Sexagesimal() : digits_{0} {}

    // Digits are most significant first; frac_len of them sit after the radix.
    Sexagesimal(std::vector<int> digits, int frac_len);

    static Sexagesimal from_integer(const Integer& n);
    // Throws irregular_number when the value has no finite base-60 expansion.
    static Sexagesimal from_ratio(const ExactRatio& r);

    const std::vector<std::uint8_t>& digits() const noexcept { return digits_; }
    int frac_len() const noexcept { return frac_len_; }
    int int_len() const noexcept { return static_cast<int>(digits_.size()) - frac_len_; }
    bool is_zero() const noexcept { return digits_.size() == 1 && digits_[0] == 0; }
    bool is_integer() const noexcept { return frac_len_ == 0; }

    ExactRatio value() const;
    // Integer formed by all digits with the radix dropped: value * 60^frac_len.
    Integer scaled() const;

    friend bool operator==(const Sexagesimal&, const Sexagesimal&) = default;
    friend std::strong_ordering operator<=>(const Sexagesimal& a, const Sexagesimal& b) {
        return a.value() <=> b.value();
    }

private:
    void normalize();

    std::vector<std::uint8_t> digits_;
    int frac_len_ = 0;
};

Sexagesimal add(const Sexagesimal& a, const Sexagesimal& b);
Sexagesimal mul(const Sexagesimal& a, const Sexagesimal& b);
inline Sexagesimal operator+(const Sexagesimal& a, const Sexagesimal& b) { return add(a, b); }
inline Sexagesimal operator*(const Sexagesimal& a, const Sexagesimal& b) { return mul(a, b); }

// mantissa * 60^shift.  The mantissa is stored as a whole number with no
// trailing zero digit, so each value has exactly one representation.
class PlaceValue {
public:
    PlaceValue() = default;
    PlaceValue(const Sexagesimal& mantissa, int shift);
    PlaceValue(const Integer& coefficient, int shift);
    static PlaceValue from_ratio(const ExactRatio& r);

    const Sexagesimal& mantissa() const noexcept { return mantissa_; }
    int shift() const noexcept { return shift_; }
    Integer coefficient() const { return mantissa_.scaled(); }

    ExactRatio value() const;
    Sexagesimal to_sexagesimal() const { return Sexagesimal::from_ratio(value()); }

    // Exact equality of values.
    friend bool operator==(const PlaceValue& a, const PlaceValue& b) {
        return a.mantissa_ == b.mantissa_ && a.shift_ == b.shift_;
    }

private:
    Sexagesimal mantissa_;
    int shift_ = 0;
};

// Equality up to a power of 60: the relative reading of a numeral whose
// absolute scale is left implicit.
bool same_digits(const PlaceValue& a, const PlaceValue& b);
bool same_digits(const Sexagesimal& a, const Sexagesimal& b);

enum class Style { paper, colon };

using Numeral = std::variant<Sexagesimal, PlaceValue>;

Numeral parse(std::string_view text);
Sexagesimal parse_sexagesimal(std::string_view text);
PlaceValue parse_place_value(std::string_view text);

std::string format(const Sexagesimal& value, Style style = Style::paper);
std::string format(const PlaceValue& value, Style style = Style::paper);
std::string format(const Numeral& value, Style style = Style::paper);

// Reciprocal of a regular numeral as a place value: x * r is a power of 60.
PlaceValue reciprocal(const Sexagesimal& x);

// 60^-8, the resolution of an eight-place fraction.
PlaceValue machine_epsilon();

}  // namespace maksarum
