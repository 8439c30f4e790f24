#include "maksarum/exact.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include <boost/multiprecision/miller_rabin.hpp>

#include "maksarum/errors.hpp"

namespace maksarum {

namespace mp = boost::multiprecision;

Integer gcd(const Integer& a, const Integer& b) { return mp::gcd(a, b); }

Integer pow_int(const Integer& base, unsigned exponent) { return mp::pow(base, exponent); }

Integer pow60(unsigned exponent) { return mp::pow(Integer(60), exponent); }

bool is_regular(const Integer& n) {
    if (n <= 0) throw domain_error("is_regular needs a positive integer");
    Integer m = n;
    for (int p : {2, 3, 5}) {
        while (m % p == 0) m /= p;
    }
    return m == 1;
}

Integer isqrt(const Integer& n) {
    if (n < 0) throw domain_error("square root of a negative integer");
    Integer r = mp::sqrt(n);
    if (r * r != n) throw not_a_perfect_square(n.str() + " is not a perfect square");
    return r;
}

bool is_perfect_square(const Integer& n) {
    if (n < 0) return false;
    Integer r = mp::sqrt(n);
    return r * r == n;
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // First thirteen primes as witnesses make Miller-Rabin deterministic
    // below 3.3e24; past that it is probabilistic with a fixed seed.
    static const std::array<unsigned, 13> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    Integer d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (unsigned a : witnesses) {
        Integer x = mp::powm(Integer(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mp::powm(x, 2, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    if (n < Integer("3317044064679887385961981")) return true;
    return mp::miller_rabin_test(n, 25);
}

ExactRatio::ExactRatio(const Integer& n) : value_(n) {
    if (n < 0) throw underflow_error("ratios are nonnegative");
}

ExactRatio::ExactRatio(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) throw domain_error("zero denominator");
    if (numerator < 0 || denominator < 0) throw underflow_error("ratios are nonnegative");
    value_ = Rational(numerator, denominator);
}

ExactRatio operator+(const ExactRatio& a, const ExactRatio& b) { return ExactRatio(Rational(a.value_ + b.value_)); }

ExactRatio operator-(const ExactRatio& a, const ExactRatio& b) {
    if (b.value_ > a.value_) throw underflow_error("subtraction below zero: " + a.str() + " - " + b.str());
    return ExactRatio(Rational(a.value_ - b.value_));
}

ExactRatio operator*(const ExactRatio& a, const ExactRatio& b) { return ExactRatio(Rational(a.value_ * b.value_)); }

ExactRatio operator/(const ExactRatio& a, const ExactRatio& b) {
    if (b.is_zero()) throw domain_error("division by zero");
    return ExactRatio(Rational(a.value_ / b.value_));
}

std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string ExactRatio::str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

double ExactRatio::to_double() const { return value_.convert_to<double>(); }

Integer parse_integer(std::string_view digits) {
    if (digits.empty()) throw parse_error(std::string(digits), 0, "expected digits");
    for (std::size_t i = 0; i < digits.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(digits[i]))) throw parse_error(std::string(digits), i, "not a digit");
    const auto first = std::min(digits.find_first_not_of('0'), digits.size() - 1);
    return Integer(std::string(digits.substr(first)));
}

ExactRatio parse_ratio(const std::string& text) {
    auto slash = text.find('/');
    auto digits_only = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    if (slash == std::string::npos) {
        auto dot = text.find('.');
        if (dot == std::string::npos) {
            if (!digits_only(text)) throw parse_error(text, 0, "expected a nonnegative integer or fraction");
            return ExactRatio(parse_integer(text));
        }
        std::string whole = text.substr(0, dot);
        std::string frac = text.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (!digits_only(whole) || !digits_only(frac)) throw parse_error(text, dot, "malformed decimal");
        return ExactRatio(parse_integer(whole + frac), pow_int(10, static_cast<unsigned>(frac.size())));
    }
    std::string n = text.substr(0, slash);
    std::string d = text.substr(slash + 1);
    if (!digits_only(n)) throw parse_error(text, 0, "malformed numerator");
    if (!digits_only(d)) throw parse_error(text, slash + 1, "malformed denominator");
    return ExactRatio(parse_integer(n), parse_integer(d));
}

std::string to_decimal(const ExactRatio& value, unsigned digits) {
    const Integer scale = pow_int(10, digits);
    Integer scaled = value.numerator() * scale / value.denominator();
    std::string whole = Integer(scaled / scale).str();
    if (digits == 0) return whole;
    std::string frac = Integer(scaled % scale).str();
    frac.insert(0, digits - frac.size(), '0');
    return whole + "." + frac;
}

std::string to_decimal_rounded(const ExactRatio& value, unsigned digits) {
    const Integer scale = pow_int(10, digits);
    Integer scaled = (2 * value.numerator() * scale + value.denominator()) / (2 * value.denominator());
    std::string whole = Integer(scaled / scale).str();
    std::string frac = Integer(scaled % scale).str();
    frac.insert(0, digits - frac.size(), '0');
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    return frac.empty() ? whole : whole + "." + frac;
}

int sexagesimal_places(const ExactRatio& value) {
    Integer den = value.denominator();
    if (!is_regular(den)) return -1;
    int n = 0;
    Integer p = 1;
    while (p % den != 0) {
        p *= 60;
        ++n;
    }
    return n;
}

}  // namespace maksarum
