#pragma once

#include "ehrspec/frac_poly.hpp"
#include "ehrspec/geometry.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace ehrspec {

/// Newton spectrum of a reduced simplex from its weight vector alone.
///
/// With F = { l/q_i : 0 <= l < q_i } sorted as f_1 < ... < f_k and
/// d_i = #{ j : q_j f_i is an integer }, the sequence c_0..c_{mu-1} lists each
/// f_i exactly d_i times, and the spectrum is sum_k z^(k - mu c_k).
/// Throws NotReduced when gcd(q) > 1; the formula is false there.
inline FracPoly spectrum_reduced_simplex(const WeightVector &w) {
    if (w.q.empty()) throw InvalidInput("empty weight vector");
    for (const auto &q : w.q)
        if (q <= 0) throw InvalidInput("weights must be positive");
    if (!is_reduced(w)) throw NotReduced("gcd of the weights is greater than 1");

    std::set<Rat> fractions;
    for (const auto &q : w.q)
        for (BigInt l = 0; l < q; ++l) fractions.insert(Rat(l, q));

    const BigInt mu = milnor_number(w);
    FracPoly spec;
    BigInt k = 0;
    for (const auto &f : fractions) {
        std::size_t d = 0;
        for (const auto &q : w.q)
            if ((Rat(q) * f).is_integer()) ++d;
        for (std::size_t r = 0; r < d; ++r, ++k) spec.add_term(Rat(k) - Rat(mu) * f, 1);
    }
    if (k != mu) throw InternalInconsistency("c-sequence length differs from the Milnor number");
    return spec;
}

namespace detail {

inline void check_exponents_in_range(const FracPoly &spec, std::int64_t n) {
    for (const auto &[e, c] : spec)
        if (e.sign() < 0 || e > Rat(n))
            throw ExponentOutOfRange("exponent " + e.to_string() + " outside [0, " + std::to_string(n) + "]");
}

} // namespace detail

/// delta_k = spectrum mass on ]k-1, k]; delta_0 is the mass at 0.
inline std::vector<BigInt> spectrum_to_delta(const FracPoly &spec, std::int64_t n) {
    detail::check_exponents_in_range(spec, n);
    std::vector<BigInt> delta(static_cast<std::size_t>(n) + 1, 0);
    for (const auto &[e, c] : spec) delta[static_cast<std::size_t>(e.ceil())] += c;
    return delta;
}

/// Weighted delta-vectors keyed by alpha in ]-1, 0], ordered 0, -1/5, -2/5, ...
using WeightedDelta = std::map<Rat, FracPoly, std::greater<>>;

/// Each term z^beta goes to class alpha = beta - ceil(beta) as z^ceil(beta).
inline WeightedDelta weighted_delta_decomposition(const FracPoly &spec, std::int64_t n) {
    detail::check_exponents_in_range(spec, n);
    WeightedDelta classes;
    for (const auto &[e, c] : spec) {
        Rat up(e.ceil());
        classes[e - up].add_term(up, c);
    }
    return classes;
}

inline bool spectrum_is_integral(const FracPoly &spec) {
    for (const auto &[e, c] : spec)
        if (!e.is_integer()) return false;
    return true;
}

/// Coefficient sequence a_0..a_n of an integral FracPoly.
inline std::vector<BigInt> integral_coefficients(const FracPoly &spec, std::int64_t n) {
    std::vector<BigInt> a(static_cast<std::size_t>(n) + 1, 0);
    for (const auto &[e, c] : spec) {
        if (!e.is_integer() || e.sign() < 0 || e > Rat(n))
            throw ExponentOutOfRange("exponent " + e.to_string() + " is not an integer in [0, n]");
        a[static_cast<std::size_t>(e.num())] += c;
    }
    return a;
}

/// a_0 <= ... <= a_j >= ... >= a_n for some j.
inline bool is_unimodal(const std::vector<BigInt> &a) {
    std::size_t i = 0;
    while (i + 1 < a.size() && a[i] <= a[i + 1]) ++i;
    while (i + 1 < a.size() && a[i] >= a[i + 1]) ++i;
    return i + 1 >= a.size();
}

struct SpectrumReport {
    FracPoly spec;
    std::int64_t dim = 0;
    BigInt mu;
    Rat mean;
    Rat variance;
    // Empty when the spectrum is not integral (unimodality not applicable).
    std::optional<bool> unimodal_integer_part;
    bool is_integral = false;
    // Reported only; variance >= n/12 is a conjecture, not an invariant.
    bool variance_at_least_n_over_12 = false;
};

inline SpectrumReport spectrum_stats(const FracPoly &spec, std::int64_t n) {
    detail::check_exponents_in_range(spec, n);
    SpectrumReport r;
    r.spec = spec;
    r.dim = n;
    r.mu = total(spec);
    r.is_integral = spectrum_is_integral(spec);
    if (r.mu != 0) {
        Rat sum, sq;
        const Rat centre = Rat(n) / Rat(2);
        for (const auto &[e, c] : spec) {
            sum += Rat(c) * e;
            sq += Rat(c) * (e - centre) * (e - centre);
        }
        r.mean = sum / Rat(r.mu);
        r.variance = sq / Rat(r.mu);
    }
    if (r.is_integral) r.unimodal_integer_part = is_unimodal(integral_coefficients(spec, n));
    r.variance_at_least_n_over_12 = r.variance >= Rat(n) / Rat(12);
    return r;
}

/// Toric spectrum of u_1^{a_1} + ... + u_r^{a_r}: prod_k sum_{i<a_k} z^{i/a_k}.
inline FracPoly toric_spectrum_box(const std::vector<std::int64_t> &exponents) {
    FracPoly result = FracPoly::monomial(Rat(0));
    for (auto a : exponents) {
        if (a < 1) throw InvalidInput("box exponents must be >= 1");
        FracPoly factor;
        for (std::int64_t i = 0; i < a; ++i) factor.add_term(Rat(BigInt(i), BigInt(a)), 1);
        result = result * factor;
    }
    return result;
}

/// Toric spectrum of u_1 + u_2 + u_3 + u_1 u_2 u_3^h:
/// 1 + z + z^2 + sum_{i=1}^{h-1} z^{1 + i/h}.
inline FracPoly toric_spectrum_reeve(std::int64_t h) {
    if (h < 2) throw InvalidInput("reeve parameter h must be >= 2");
    FracPoly f{{Rat(0), 1}, {Rat(1), 1}, {Rat(2), 1}};
    for (std::int64_t i = 1; i < h; ++i) f.add_term(Rat(1) + Rat(BigInt(i), BigInt(h)), 1);
    return f;
}

} // namespace ehrspec
