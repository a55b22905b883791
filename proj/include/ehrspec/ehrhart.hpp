#pragma once

#include "ehrspec/frac_poly.hpp"
#include "ehrspec/rat_poly.hpp"
#include "ehrspec/spectrum.hpp"

#include <map>
#include <vector>

namespace ehrspec {

/// binom(z + k, n) as a polynomial in z: (z+k)(z+k-1)...(z+k-n+1) / n!.
inline RatPoly binomial_poly(std::int64_t k, std::int64_t n) {
    RatPoly p = RatPoly::constant(1);
    for (std::int64_t i = 0; i < n; ++i) p = p * RatPoly({Rat(k - i), Rat(1)});
    return Rat(1) / Rat(factorial(n)) * p;
}

/// L(z) = sum_j delta_j binom(z + n - j, n).
inline RatPoly delta_to_ehrhart(const std::vector<BigInt> &delta, std::int64_t n) {
    if (n < 1) throw InvalidInput("dimension must be positive");
    if (delta.size() != static_cast<std::size_t>(n) + 1)
        throw InvalidInput("delta-vector must have n+1 entries");
    RatPoly l;
    for (std::int64_t j = 0; j <= n; ++j) {
        const auto &d = delta[static_cast<std::size_t>(j)];
        if (d != 0) l += Rat(d) * binomial_poly(n - j, n);
    }
    return l;
}

/// Same binomial-basis expansion for one weighted class delta^alpha.
inline RatPoly weighted_ehrhart(const FracPoly &delta_alpha, std::int64_t n) {
    return delta_to_ehrhart(integral_coefficients(delta_alpha, n), n);
}

using WeightedEhrhart = std::map<Rat, RatPoly, std::greater<>>;

inline WeightedEhrhart weighted_ehrhart_all(const WeightedDelta &classes, std::int64_t n) {
    WeightedEhrhart out;
    for (const auto &[alpha, d] : classes) out.emplace(alpha, weighted_ehrhart(d, n));
    return out;
}

/// First `terms` coefficients of delta(z) / (1 - z)^{n+1}, by n+1 rounds of
/// prefix summation (each round divides by 1 - z).
inline std::vector<BigInt> ehrhart_series_truncated(const std::vector<BigInt> &delta, std::int64_t n,
                                                    std::size_t terms) {
    if (terms < 1) throw InvalidInput("at least one series term is required");
    if (delta.size() != static_cast<std::size_t>(n) + 1)
        throw InvalidInput("delta-vector must have n+1 entries");
    std::vector<BigInt> s(terms, 0);
    for (std::size_t i = 0; i < delta.size() && i < terms; ++i) s[i] = delta[i];
    for (std::int64_t round = 0; round <= n; ++round)
        for (std::size_t i = 1; i < terms; ++i) s[i] += s[i - 1];
    return s;
}

} // namespace ehrspec
