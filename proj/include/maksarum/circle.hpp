#pragma once

#include <string>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "maksarum/exact.hpp"
#include "maksarum/sexagesimal.hpp"

namespace maksarum {

using Decimal = boost::multiprecision::cpp_dec_float_100;

Decimal pi_decimal();

// floor(x 60^k) / 60^k.
Sexagesimal truncate_sexagesimal(const Decimal& x, unsigned places);
Decimal to_decimal_value(const ExactRatio& r);
// Scientific notation when tiny, fixed otherwise, with `significant` digits.
std::string decimal_string(const Decimal& x, int significant);

struct PiApproximation {
    unsigned k = 0;
    Sexagesimal digits;  // 03.~08~29... truncated to k places
    Decimal error;       // pi - value, always in [0, 60^-k)

    ExactRatio value() const { return digits.value(); }
};

// 1 <= k <= 8.
PiApproximation pi_digits(unsigned k);

// B = c^2 / 12, the area taken from the circumference with pi read as 3.
ExactRatio area_upper(const ExactRatio& c);
// A = (3/pi) B = c^2 / (4 pi).
Decimal true_area(const ExactRatio& c);
Decimal area_correction();  // 3/pi

struct RingRatio {
    Decimal ratio;           // sqrt(pi/3)
    Sexagesimal truncation;  // five fractional places
};
RingRatio outer_ring_ratio();

}  // namespace maksarum
