#include "maksarum/divisors.hpp"

#include <algorithm>

#include "maksarum/errors.hpp"

namespace maksarum {

Factorization factorize(const Integer& n) {
    if (n < 1) throw domain_error("factorize needs a positive integer");
    Factorization out;
    Integer m = n;
    for (Integer p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e) out.push_back({p, e});
    }
    if (m > 1) out.push_back({m, 1});
    return out;
}

Factorization multiply(const Factorization& a, const Factorization& b) {
    Factorization out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].prime < b[j].prime)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].prime < a[i].prime) {
            out.push_back(b[j++]);
        } else {
            out.push_back({a[i].prime, a[i].exponent + b[j].exponent});
            ++i;
            ++j;
        }
    }
    return out;
}

Factorization power(const Factorization& f, unsigned k) {
    Factorization out = f;
    for (auto& pp : out) pp.exponent *= k;
    if (k == 0) out.clear();
    return out;
}

std::vector<Integer> divisors(const Factorization& f) {
    std::vector<Integer> out{1};
    for (const auto& [p, e] : f) {
        const std::size_t base = out.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SmallPrimePower> factorize_small(std::uint64_t n) {
    if (n == 0) throw domain_error("factorize needs a positive integer");
    std::vector<SmallPrimePower> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::vector<std::uint64_t> divisors_small(const std::vector<SmallPrimePower>& f) {
    std::vector<std::uint64_t> out{1};
    for (const auto& [p, e] : f) {
        const std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace maksarum
