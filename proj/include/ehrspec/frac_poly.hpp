#pragma once

#include "ehrspec/rat.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace ehrspec {

/// Finite sum of terms c * z^e with rational exponents e and integer
/// coefficients c. Zero coefficients are never stored, so two FracPolys are
/// equal iff their term maps are equal. Iteration is by ascending exponent.
class FracPoly {
public:
    using Terms = std::map<Rat, BigInt>;

    FracPoly() = default;
    FracPoly(std::initializer_list<std::pair<const Rat, BigInt>> init) {
        for (const auto &[e, c] : init) add_term(e, c);
    }

    static FracPoly monomial(const Rat &exponent, const BigInt &coeff = 1) {
        FracPoly f;
        f.add_term(exponent, coeff);
        return f;
    }

    void add_term(const Rat &exponent, const BigInt &coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(exponent, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const Terms &terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    BigInt coefficient(const Rat &exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    FracPoly &operator+=(const FracPoly &o) {
        for (const auto &[e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    FracPoly &operator-=(const FracPoly &o) {
        for (const auto &[e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend FracPoly operator+(FracPoly a, const FracPoly &b) { return a += b; }
    friend FracPoly operator-(FracPoly a, const FracPoly &b) { return a -= b; }

    friend FracPoly operator*(const FracPoly &a, const FracPoly &b) {
        FracPoly r;
        for (const auto &[ea, ca] : a.terms_)
            for (const auto &[eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    friend FracPoly operator*(const BigInt &k, const FracPoly &f) {
        FracPoly r;
        for (const auto &[e, c] : f.terms_) r.add_term(e, k * c);
        return r;
    }

    friend bool operator==(const FracPoly &, const FracPoly &) = default;

    // Canonical serialization: "c*z^(p/q)" terms joined by " + " / " - ".
    std::string to_string() const;
    // Human-facing form close to textbook notation: "1 + 3z^(1/2) + 4z".
    std::string to_display() const;
    // Inverse of to_string().
    static FracPoly parse(std::string_view text);

private:
    Terms terms_;
};

/// Adds `by` to every exponent.
inline FracPoly shift(const FracPoly &f, const Rat &by) {
    FracPoly r;
    for (const auto &[e, c] : f) r.add_term(e + by, c);
    return r;
}

/// f * (1 - z)^k.
inline FracPoly mul_one_minus_z_pow(const FracPoly &f, unsigned k) {
    FracPoly r;
    for (unsigned j = 0; j <= k; ++j) {
        BigInt b = binomial(k, j);
        if (j % 2) b = -b;
        for (const auto &[e, c] : f) r.add_term(e + Rat(j), b * c);
    }
    return r;
}

/// Maps each term z^e to z^(n - e); computes z^n f(1/z).
inline FracPoly reflect(const FracPoly &f, std::int64_t n) {
    FracPoly r;
    for (const auto &[e, c] : f) r.add_term(Rat(n) - e, c);
    return r;
}

struct Interval {
    Rat lo;
    Rat hi;
    bool lo_closed = true;
    bool hi_closed = true;

    bool contains(const Rat &x) const {
        bool above = lo_closed ? x >= lo : x > lo;
        bool below = hi_closed ? x <= hi : x < hi;
        return above && below;
    }
};

inline FracPoly restrict_to(const FracPoly &f, const Interval &iv) {
    if (iv.lo > iv.hi) throw InvalidInput("interval with lo > hi");
    FracPoly r;
    for (const auto &[e, c] : f)
        if (iv.contains(e)) r.add_term(e, c);
    return r;
}

/// Value at z = 1.
inline BigInt total(const FracPoly &f) {
    BigInt s = 0;
    for (const auto &[e, c] : f) s += c;
    return s;
}

inline std::string FracPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        out += mag.str() + "*z^(" + e.to_string() + ")";
        first = false;
    }
    return out;
}

inline std::string FracPoly::to_display() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (e.is_zero()) {
            out += mag.str();
            continue;
        }
        if (mag != 1) out += mag.str();
        out += "z";
        if (e == Rat(1)) continue;
        out += e.is_integer() && e.sign() > 0 ? "^" + e.to_string() : "^(" + e.to_string() + ")";
    }
    return out;
}

inline FracPoly FracPoly::parse(std::string_view text) {
    auto fail = [&] { return InvalidInput("malformed FracPoly '" + std::string(text) + "'"); };
    std::string s;
    for (char ch : text)
        if (ch != ' ') s += ch;
    if (s == "0") return {};
    FracPoly f;
    std::size_t i = 0;
    while (i < s.size()) {
        bool negative = false;
        if (s[i] == '+' || s[i] == '-') {
            negative = s[i] == '-';
            ++i;
        } else if (i != 0) {
            throw fail();
        }
        auto star = s.find("*z^(", i);
        if (star == std::string::npos) throw fail();
        auto close = s.find(')', star);
        if (close == std::string::npos) throw fail();
        BigInt coeff;
        try {
            coeff = BigInt(s.substr(i, star - i));
        } catch (const std::exception &) {
            throw fail();
        }
        Rat e = Rat::parse(s.substr(star + 4, close - star - 4));
        f.add_term(e, negative ? BigInt(-coeff) : coeff);
        i = close + 1;
    }
    return f;
}

inline std::ostream &operator<<(std::ostream &os, const FracPoly &f) { return os << f.to_string(); }

} // namespace ehrspec
