#include "maksarum/factor_algorithm.hpp"

#include <algorithm>

#include "maksarum/errors.hpp"

namespace maksarum {

Triple make_triple(const Integer& a, const Integer& b, const Integer& d) {
    Triple t{a, b, d};
    if (!t.is_pythagorean()) throw contract_violation("not a right triangle: " + to_string(t));
    return t;
}

std::string to_string(const Triple& t) { return "(" + t.a.str() + ", " + t.b.str() + ", " + t.d.str() + ")"; }

FourthColumn fourth_column(const Triple& t, FourthVariant variant) {
    ExactRatio ratio(t.a * t.a, t.b * t.b);
    if (variant == FourthVariant::diagonal) ratio += ExactRatio(1);
    const int places = sexagesimal_places(ratio);
    if (places < 0)
        throw irregular_number("a^2/b^2 for " + to_string(t) + " has no finite sexagesimal expansion");
    Integer coefficient = ratio.numerator() * pow60(static_cast<unsigned>(places)) / ratio.denominator();
    return {coefficient, places, variant};
}

std::optional<FourthColumn> try_fourth_column(const Triple& t, FourthVariant variant) {
    ExactRatio ratio(t.a * t.a, t.b * t.b);
    if (!is_regular(ratio.denominator())) return std::nullopt;
    return fourth_column(t, variant);
}

std::optional<ReciprocalFourth> reciprocal_fourth(const Triple& t) {
    if (!is_regular(t.b)) return std::nullopt;
    ReciprocalFourth r;
    Integer p = 1;
    while (p % t.b != 0) {
        p *= 60;
        ++r.places;
    }
    r.b_reciprocal = p / t.b;
    Integer ab = t.a * r.b_reciprocal;
    r.coefficient = ab * ab;
    r.shift = static_cast<int>(2 * r.places);
    return r;
}

GeneratorSolution solve_integer(const Integer& x, const Integer& Q, const Integer& M) {
    if (M < 1 || Q < 1) throw domain_error("M and Q must be positive");
    if (x < 2) throw domain_error("generator x must be at least 2");
    const Integer b = M * Q;
    const Integer b2 = b * b;
    if (b2 % x != 0) throw non_divisor_generator(x.str() + " does not divide " + b2.str());
    const Integer y = b2 / x;
    if (x >= y) throw degenerate_generator("x = " + x.str() + " is not below y = " + y.str());
    if ((y - x) % 2 != 0) throw non_integer_sides("x = " + x.str() + " and y = " + y.str() + " differ in parity");
    GeneratorSolution s{x, y, Q, M, Triple{(y - x) / 2, b, (y + x) / 2}, std::nullopt};
    s.fourth = try_fourth_column(s.triple);
    return s;
}

Triple general(const Integer& M, const Integer& Q, const Integer& x) { return solve_integer(x, Q, M).triple; }

NormalizedSides normalized_sides(const ExactRatio& X, const Integer& M) {
    const ExactRatio m(M);
    if (X.is_zero()) throw domain_error("generator X must be positive");
    if (X >= m) throw domain_error("generator X = " + X.str() + " must stay below M = " + M.str());
    const ExactRatio Y = m * m / X;
    return {(Y - X) / ExactRatio(2), (Y + X) / ExactRatio(2)};
}

DerivedScale derive_Q(const ExactRatio& A, const ExactRatio& D, const Integer& M) {
    const ExactRatio m(M);
    if (A * A + m * m != D * D) throw contract_violation("A^2 + M^2 != D^2 for A = " + A.str() + ", D = " + D.str());
    const int pa = sexagesimal_places(A);
    const int pd = sexagesimal_places(D);
    if (pa < 0 || pd < 0) throw irregular_number("normalized sides must be finite sexagesimals");
    const auto n = static_cast<unsigned>(std::max(pa, pd));
    const Integer scale = pow60(n);
    const Integer a = A.numerator() * scale / A.denominator();
    const Integer d = D.numerator() * scale / D.denominator();
    const Integer b = M * scale;
    const Integer g = gcd(gcd(a, b), d);
    return {ExactRatio(scale, g), make_triple(a / g, b / g, d / g), n};
}

std::strong_ordering angle_order(const Triple& t1, const Triple& t2) {
    const Integer lhs = t1.a * t2.b;
    const Integer rhs = t2.a * t1.b;
    if (lhs < rhs) return std::strong_ordering::less;
    if (rhs < lhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Triple primitive_reduce(const Triple& t) {
    const Integer g = gcd(gcd(t.a, t.b), t.d);
    if (g <= 1) return t;
    return {t.a / g, t.b / g, t.d / g};
}

}  // namespace maksarum
