#pragma once

#include <cstdint>
#include <vector>

#include "maksarum/exact.hpp"

namespace maksarum {

struct PrimePower {
    Integer prime;
    unsigned exponent = 0;
};

// Ascending by prime.
using Factorization = std::vector<PrimePower>;

// Trial division; meant for the small bundling factors and scale generators
// this toolkit deals with, not for cryptographic sizes.
Factorization factorize(const Integer& n);
Factorization multiply(const Factorization& a, const Factorization& b);
Factorization power(const Factorization& f, unsigned k);

// All divisors, ascending.
std::vector<Integer> divisors(const Factorization& f);

// Machine-word variants used by the survey inner loop.
struct SmallPrimePower {
    std::uint64_t prime;
    unsigned exponent;
};
std::vector<SmallPrimePower> factorize_small(std::uint64_t n);
std::vector<std::uint64_t> divisors_small(const std::vector<SmallPrimePower>& f);

}  // namespace maksarum
