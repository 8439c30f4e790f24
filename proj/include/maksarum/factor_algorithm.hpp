#pragma once

#include <compare>
#include <optional>
#include <string>

#include "maksarum/exact.hpp"
#include "maksarum/sexagesimal.hpp"

namespace maksarum {

// Integer right triangle: a short side, b long (bundled) side, d diagonal.
struct Triple {
    Integer a;
    Integer b;
    Integer d;

    bool is_pythagorean() const { return a >= 1 && b >= 1 && d >= 1 && a * a + b * b == d * d; }
    friend bool operator==(const Triple&, const Triple&) = default;
};

// Throws contract_violation unless a^2 + b^2 = d^2 with positive sides.
Triple make_triple(const Integer& a, const Integer& b, const Integer& d);

std::string to_string(const Triple& t);

enum class FourthVariant { short_side, diagonal };

// coefficient * 60^-shift, with the shift as small as it can be.
struct FourthColumn {
    Integer coefficient;
    int shift = 0;
    FourthVariant variant = FourthVariant::short_side;

    ExactRatio value() const { return ExactRatio(coefficient, pow60(static_cast<unsigned>(shift))); }
    PlaceValue place_value() const { return PlaceValue(coefficient, -shift); }
    friend bool operator==(const FourthColumn&, const FourthColumn&) = default;
};

// a^2/b^2 (or d^2/b^2).  Throws irregular_number when the ratio has an
// irregular denominator and so no finite base-60 expansion.
FourthColumn fourth_column(const Triple& t, FourthVariant variant = FourthVariant::short_side);
std::optional<FourthColumn> try_fourth_column(const Triple& t, FourthVariant variant = FourthVariant::short_side);

// The way the integer-solution tables print the column: multiply a by the
// reciprocal of b taken to m places (m least with b | 60^m), then square.
// The shift is 2m and is not reduced.  Empty when b is irregular.
struct ReciprocalFourth {
    Integer b_reciprocal;  // 60^m / b
    unsigned places = 0;   // m
    Integer coefficient;   // (a * b_reciprocal)^2
    int shift = 0;         // 2m

    ExactRatio value() const { return ExactRatio(coefficient, pow60(static_cast<unsigned>(shift))); }
};
std::optional<ReciprocalFourth> reciprocal_fourth(const Triple& t);

struct GeneratorSolution {
    Integer x;
    Integer y;
    Integer Q;
    Integer M;
    Triple triple;
    std::optional<FourthColumn> fourth;  // empty when a^2/b^2 does not terminate
};

// x * y = (M Q)^2 with a = (y - x)/2, d = (y + x)/2, b = M Q.
GeneratorSolution solve_integer(const Integer& x, const Integer& Q, const Integer& M = 12);

// Same scheme with the bundling factor spelled out; for M = 12 it is
// solve_integer's triple.
Triple general(const Integer& M, const Integer& Q, const Integer& x);

struct NormalizedSides {
    ExactRatio A;
    ExactRatio D;
};

// A = (M^2/X - X)/2, D = (M^2/X + X)/2 for 0 < X < M.
NormalizedSides normalized_sides(const ExactRatio& X, const Integer& M = 12);

struct DerivedScale {
    ExactRatio Q;       // may be fractional, e.g. 1/3 for (3, 4, 5)
    Triple triple;      // (A Q, M Q, D Q), coprime
    unsigned places = 0;  // least n with A 60^n and D 60^n whole
};

DerivedScale derive_Q(const ExactRatio& A, const ExactRatio& D, const Integer& M = 12);

// Compares arctan(a/b) exactly by cross multiplication.
std::strong_ordering angle_order(const Triple& t1, const Triple& t2);

// Divides out gcd(a, b, d).
Triple primitive_reduce(const Triple& t);

}  // namespace maksarum
