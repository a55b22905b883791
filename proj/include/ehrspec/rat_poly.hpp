#pragma once

#include "ehrspec/rat.hpp"

#include <algorithm>
#include <span>
#include <string>
#include <vector>

namespace ehrspec {

/// Dense univariate polynomial with exact rational coefficients; index i
/// holds the coefficient of z^i and trailing zeros are trimmed.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    RatPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

    static RatPoly constant(const Rat &c) { return RatPoly({c}); }
    static RatPoly x() { return RatPoly({Rat(0), Rat(1)}); }

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat> &coefficients() const { return c_; }
    Rat coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    Rat eval(const Rat &x) const {
        Rat acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    RatPoly &operator+=(const RatPoly &o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    RatPoly &operator-=(const RatPoly &o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend RatPoly operator+(RatPoly a, const RatPoly &b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly &b) { return a -= b; }

    friend RatPoly operator*(const RatPoly &a, const RatPoly &b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return RatPoly(std::move(r));
    }
    friend RatPoly operator*(const Rat &k, const RatPoly &p) {
        std::vector<Rat> r = p.c_;
        for (auto &c : r) c *= k;
        return RatPoly(std::move(r));
    }

    friend bool operator==(const RatPoly &, const RatPoly &) = default;

    // "1/24*(9z^4 + 10z^3 + 75z^2 + 50z + 24)"; the prefix is dropped when the
    // common denominator is 1.
    std::string to_string() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rat> c_;
};

/// Lagrange interpolation through (xs[i], ys[i]); xs must be distinct.
inline RatPoly interpolate(std::span<const Rat> xs, std::span<const Rat> ys) {
    if (xs.size() != ys.size()) throw InvalidInput("interpolation node/value size mismatch");
    RatPoly result;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        RatPoly basis = RatPoly::constant(1);
        Rat denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * RatPoly({-xs[j], Rat(1)});
            denom *= xs[i] - xs[j];
        }
        result += (ys[i] / denom) * basis;
    }
    return result;
}

inline std::string RatPoly::to_string() const {
    if (c_.empty()) return "0";
    BigInt lcm = 1;
    for (const auto &c : c_) lcm = boost::multiprecision::lcm(lcm, c.den());
    std::string body;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        BigInt v = (c_[k] * Rat(lcm)).num();
        BigInt mag = v < 0 ? BigInt(-v) : v;
        if (first) {
            if (v < 0) body += "-";
        } else {
            body += v < 0 ? " - " : " + ";
        }
        first = false;
        if (k == 0) {
            body += mag.str();
            continue;
        }
        if (mag != 1) body += mag.str();
        body += "z";
        if (k > 1) body += "^" + std::to_string(k);
    }
    if (lcm == 1) return "(" + body + ")";
    return "1/" + lcm.str() + "*(" + body + ")";
}

inline std::ostream &operator<<(std::ostream &os, const RatPoly &p) { return os << p.to_string(); }

} // namespace ehrspec
