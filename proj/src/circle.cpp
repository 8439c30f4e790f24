#include "maksarum/circle.hpp"

#include <boost/math/constants/constants.hpp>

#include "maksarum/errors.hpp"

namespace maksarum {

Decimal pi_decimal() { return boost::math::constants::pi<Decimal>(); }

Sexagesimal truncate_sexagesimal(const Decimal& x, unsigned places) {
    if (x < 0) throw underflow_error("negative numerals are not represented");
    const Decimal scaled = floor(x * Decimal(pow60(places).str()));
    const Integer whole = scaled.convert_to<Integer>();
    return Sexagesimal::from_ratio(ExactRatio(whole, pow60(places)));
}

Decimal to_decimal_value(const ExactRatio& r) {
    return Decimal(r.numerator().str()) / Decimal(r.denominator().str());
}

std::string decimal_string(const Decimal& x, int significant) {
    if (x != 0 && abs(x) < Decimal("1e-4")) return x.str(significant, std::ios_base::scientific);
    // Decimal exponent of the leading digit, so that `significant` digits show.
    int exponent = 0;
    if (x != 0) {
        Decimal t = abs(x);
        for (; t >= 10; t /= 10) ++exponent;
        for (; t < 1; t *= 10) --exponent;
    }
    return x.str(std::max(significant - 1 - exponent, 0), std::ios_base::fixed);
}

PiApproximation pi_digits(unsigned k) {
    if (k < 1 || k > 8) throw domain_error("pi truncation depth must be within 1..8");
    PiApproximation p;
    p.k = k;
    p.digits = truncate_sexagesimal(pi_decimal(), k);
    p.error = pi_decimal() - to_decimal_value(p.digits.value());
    return p;
}

ExactRatio area_upper(const ExactRatio& c) {
    if (c.is_zero()) throw domain_error("circumference must be positive");
    return c * c / ExactRatio(12);
}

Decimal area_correction() { return Decimal(3) / pi_decimal(); }

Decimal true_area(const ExactRatio& c) { return area_correction() * to_decimal_value(area_upper(c)); }

RingRatio outer_ring_ratio() {
    const Decimal ratio = sqrt(pi_decimal() / 3);
    return {ratio, truncate_sexagesimal(ratio, 5)};
}

}  // namespace maksarum
