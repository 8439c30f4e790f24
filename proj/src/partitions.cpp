#include "maksarum/partitions.hpp"

#include <utility>

#include "maksarum/divisors.hpp"
#include "maksarum/errors.hpp"

namespace maksarum {

namespace {

bool finite_within(const ExactRatio& v, unsigned places) {
    const int p = sexagesimal_places(v);
    return p >= 0 && static_cast<unsigned>(p) <= places;
}

void require_finite(const ExactRatio& v, const char* what) {
    if (sexagesimal_places(v) < 0) throw irregular_number(std::string(what) + " = " + v.str() + " does not terminate in base 60");
}

}  // namespace

GeneratorPair::GeneratorPair(ExactRatio X, ExactRatio Y, Integer M) : X_(std::move(X)), Y_(std::move(Y)), M_(std::move(M)) {
    if (M_ < 1) throw domain_error("bundling factor must be positive");
    if (X_.is_zero() || Y_.is_zero()) throw domain_error("generator factors must be positive");
    require_finite(X_, "X");
    require_finite(Y_, "Y");
    if (X_ * Y_ != ExactRatio(Integer(M_ * M_)))
        throw contract_violation("X Y = " + (X_ * Y_).str() + " instead of " + Integer(M_ * M_).str());
}

const std::vector<ReciprocalPair>& standard_table() {
    static const std::vector<ReciprocalPair> table = [] {
        const char* rows[][2] = {
            {"02", "30"},         {"03", "20"},         {"04", "15"},         {"05", "12"},
            {"06", "10"},         {"08", "07.~30"},     {"09", "06.~40"},     {"10", "06"},
            {"12", "05"},         {"15", "04"},         {"16", "03.~45"},     {"18", "03.~20"},
            {"20", "03"},         {"24", "02.~30"},     {"25", "02.~24"},     {"27", "02.~13~20"},
            {"30", "02"},         {"32", "01.~52~30"},  {"36", "01.~40"},     {"40", "01.~30"},
            {"45", "01.~20"},     {"48", "01.~15"},     {"50", "01.~12"},     {"54", "01.~06~40"},
            {"01.~00", "01~00"},  {"01.~04", "56.~15"}, {"01.~12", "50"},     {"01.~15", "48"},
            {"01.~20", "45"},     {"01.~21", "44.~26~40"},
        };
        std::vector<ReciprocalPair> out;
        for (const auto& r : rows) out.push_back({parse_sexagesimal(r[0]), parse_sexagesimal(r[1])});
        return out;
    }();
    return table;
}

GeneratorPair scale_to_partition(const ReciprocalPair& pair, const ExactRatio& U, const ExactRatio& V, const Integer& M) {
    const ExactRatio X = pair.n.value() * U;
    const ExactRatio Y = pair.nbar.value() * V;
    if (X * Y != ExactRatio(Integer(M * M)))
        throw contract_violation("scaled pair (" + X.str() + ", " + Y.str() + ") does not multiply to " + Integer(M * M).str());
    return GeneratorPair(X, Y, M);
}

GeneratorPair k_star(const ExactRatio& k, const GeneratorPair& g) {
    if (k.is_zero()) throw domain_error("k must be positive");
    const ExactRatio X = k * g.X();
    const ExactRatio Y = g.Y() / k;
    if (sexagesimal_places(X) < 0 || sexagesimal_places(Y) < 0)
        throw irregular_number("scaling by " + k.str() + " leaves the finite sexagesimals");
    return GeneratorPair(X, Y, g.M());
}

ExactRatio step_S(const GeneratorPair& g, const ExactRatio& E) { return E * g.Y() / (g.X() + E); }

GeneratorPair step(const GeneratorPair& g, const ExactRatio& E) {
    const ExactRatio J = g.X() + E;
    const ExactRatio S = step_S(g, E);
    return GeneratorPair(J, g.Y() - S, g.M());
}

GeneratorPair step_by_S(const GeneratorPair& g, const ExactRatio& S) {
    if (S >= g.Y()) throw domain_error("S must stay below Y");
    const ExactRatio K = g.Y() - S;
    const ExactRatio E = S * g.X() / K;
    return GeneratorPair(g.X() + E, K, g.M());
}

std::vector<BoundedSolution> enumerate_bounded(const Integer& M, unsigned max_frac_digits, const Interval& X_range,
                                               const BoundedOptions& options) {
    // X = p / 60^k with p | M^2 60^2k.
    const Integer scale = pow60(max_frac_digits);
    const Factorization f = multiply(power(factorize(M), 2), power(factorize(60), 2 * max_frac_digits));
    const ExactRatio m(M);
    const ExactRatio square(M * M);

    std::vector<BoundedSolution> out;
    for (const Integer& p : divisors(f)) {
        const ExactRatio X(p, scale);
        if (X >= m) break;
        if (!X_range.contains(X)) continue;
        const ExactRatio Y = square / X;
        if (!finite_within(Y, max_frac_digits)) continue;
        const NormalizedSides sides = normalized_sides(X, M);
        if (options.half_angle && sides.A >= m) continue;
        if (options.finite_sides && !(finite_within(sides.A, max_frac_digits) && finite_within(sides.D, max_frac_digits)))
            continue;
        out.push_back({GeneratorPair(X, Y, M), sides, derive_Q(sides.A, sides.D, M)});
    }
    return out;
}

}  // namespace maksarum
