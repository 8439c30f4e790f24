#pragma once

#include <optional>
#include <vector>

#include "maksarum/exact.hpp"
#include "maksarum/factor_algorithm.hpp"
#include "maksarum/sexagesimal.hpp"

namespace maksarum {

struct ReciprocalPair {
    Sexagesimal n;
    Sexagesimal nbar;
};

// X * Y = M^2 with both factors finite sexagesimals.
class GeneratorPair {
public:
    GeneratorPair(ExactRatio X, ExactRatio Y, Integer M);

    const ExactRatio& X() const noexcept { return X_; }
    const ExactRatio& Y() const noexcept { return Y_; }
    const Integer& M() const noexcept { return M_; }

    friend bool operator==(const GeneratorPair&, const GeneratorPair&) = default;

private:
    ExactRatio X_;
    ExactRatio Y_;
    Integer M_;
};

// The thirty pairs of the classical reciprocal table, in reading order
// (down the first column, then the second, then the third).
const std::vector<ReciprocalPair>& standard_table();

// (n U, nbar V); U V (n nbar) must equal M^2.
GeneratorPair scale_to_partition(const ReciprocalPair& pair, const ExactRatio& U, const ExactRatio& V,
                                 const Integer& M = 12);

// (k X, Y / k).
GeneratorPair k_star(const ExactRatio& k, const GeneratorPair& g);

// Moves X up by E and Y down by S = E Y / (X + E).
GeneratorPair step(const GeneratorPair& g, const ExactRatio& E);
// Same move stated through S: Y goes down by S and X up by E = S X / (Y - S).
GeneratorPair step_by_S(const GeneratorPair& g, const ExactRatio& S);
// S for a given E, as used by step.
ExactRatio step_S(const GeneratorPair& g, const ExactRatio& E);

struct Interval {
    ExactRatio low;
    ExactRatio high;
    bool low_closed = true;
    bool high_closed = true;

    bool contains(const ExactRatio& v) const {
        return (low_closed ? v >= low : v > low) && (high_closed ? v <= high : v < high);
    }
};

struct BoundedOptions {
    // Keep only pi/4 > theta, i.e. A < M.
    bool half_angle = true;
    // Require A and D to stay within the same number of fractional places.
    bool finite_sides = true;
};

struct BoundedSolution {
    GeneratorPair pair;
    NormalizedSides sides;
    DerivedScale scale;
};

// Every X in range, X < Y, with X and Y (and, by default, A and D) having at
// most max_frac_digits fractional sexagesimal places.  Ascending X.
std::vector<BoundedSolution> enumerate_bounded(const Integer& M, unsigned max_frac_digits, const Interval& X_range,
                                               const BoundedOptions& options = {});

}  // namespace maksarum
