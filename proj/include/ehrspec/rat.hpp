#pragma once

#include "ehrspec/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace ehrspec {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always stored reduced with a positive denominator.
class Rat {
public:
    Rat() = default;

    template <std::integral I>
    Rat(I value) : value_(static_cast<long long>(value)) {} // NOLINT(implicit)

    Rat(const BigInt &value) : value_(value) {} // NOLINT(implicit)

    Rat(const BigInt &num, const BigInt &den) {
        if (den == 0) throw InvalidInput("rational with zero denominator");
        // Boost rejects negative denominators; move the sign up first.
        value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
    }

    BigInt num() const { return boost::multiprecision::numerator(value_); }
    BigInt den() const { return boost::multiprecision::denominator(value_); }

    bool is_integer() const { return den() == 1; }
    bool is_zero() const { return value_ == 0; }
    int sign() const { return value_.sign(); }

    BigInt floor() const {
        BigInt n = num(), d = den();
        BigInt q = n / d;
        if (n < 0 && q * d != n) --q;
        return q;
    }
    BigInt ceil() const {
        BigInt n = num(), d = den();
        BigInt q = n / d;
        if (n > 0 && q * d != n) ++q;
        return q;
    }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    Rat operator-() const { return Rat(Raw{-value_}); }
    Rat &operator+=(const Rat &o) { value_ += o.value_; return *this; }
    Rat &operator-=(const Rat &o) { value_ -= o.value_; return *this; }
    Rat &operator*=(const Rat &o) { value_ *= o.value_; return *this; }
    Rat &operator/=(const Rat &o) {
        if (o.is_zero()) throw InvalidInput("rational division by zero");
        value_ /= o.value_;
        return *this;
    }
    friend Rat operator+(Rat a, const Rat &b) { return a += b; }
    friend Rat operator-(Rat a, const Rat &b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat &b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat &b) { return a /= b; }

    friend bool operator==(const Rat &a, const Rat &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rat &a, const Rat &b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (b.value_ < a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // "p/q", with "/1" omitted for integers.
    std::string to_string() const {
        std::string s = num().str();
        if (!is_integer()) s += "/" + den().str();
        return s;
    }

    // Accepts "p", "-p", "p/q" (q may be negative; the result is normalized).
    static Rat parse(std::string_view text) {
        auto parse_int = [&](std::string_view t) {
            std::size_t i = 0;
            if (!t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
            if (i == t.size()) throw InvalidInput("malformed rational '" + std::string(text) + "'");
            for (std::size_t k = i; k < t.size(); ++k)
                if (t[k] < '0' || t[k] > '9')
                    throw InvalidInput("malformed rational '" + std::string(text) + "'");
            return BigInt(std::string(t[0] == '+' ? t.substr(1) : t));
        };
        auto trim = [](std::string_view t) {
            while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
            while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
            return t;
        };
        text = trim(text);
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rat(parse_int(text));
        return Rat(parse_int(trim(text.substr(0, slash))), parse_int(trim(text.substr(slash + 1))));
    }

    friend std::ostream &operator<<(std::ostream &os, const Rat &r) { return os << r.to_string(); }

private:
    struct Raw { boost::multiprecision::cpp_rational v; };
    explicit Rat(Raw r) : value_(std::move(r.v)) {}

    boost::multiprecision::cpp_rational value_;
};

inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline BigInt factorial(std::int64_t n) {
    BigInt r = 1;
    for (std::int64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace ehrspec
