#include "ehrspec/frac_poly.hpp"
#include "ehrspec/rat.hpp"
#include "ehrspec/rat_poly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ehrspec;

namespace {

FracPoly random_fracpoly(std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> count(0, 6), num(-12, 12), den(1, 6), coeff(-5, 5);
    FracPoly f;
    for (int i = count(rng); i > 0; --i) f.add_term(Rat(BigInt(num(rng)), BigInt(den(rng))), coeff(rng));
    return f;
}

RatPoly random_ratpoly(std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> deg(0, 5), num(-20, 20), den(1, 7);
    std::vector<Rat> c;
    for (int i = deg(rng); i >= 0; --i) c.emplace_back(BigInt(num(rng)), BigInt(den(rng)));
    return RatPoly(std::move(c));
}

} // namespace

TEST(Rat, StoredReduced) {
    Rat r(BigInt(6), BigInt(-4));
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(r.to_string(), "-3/2");
    EXPECT_EQ(Rat(BigInt(10), BigInt(5)).to_string(), "2");
}

TEST(Rat, ParseAndFloorCeil) {
    EXPECT_EQ(Rat::parse("16/5"), Rat(BigInt(16), BigInt(5)));
    EXPECT_EQ(Rat::parse(" -7 "), Rat(-7));
    EXPECT_EQ(Rat::parse("3/-6"), Rat(BigInt(-1), BigInt(2)));
    EXPECT_THROW(Rat::parse("1/0"), InvalidInput);
    EXPECT_THROW(Rat::parse("abc"), InvalidInput);
    EXPECT_THROW(Rat::parse(""), InvalidInput);

    EXPECT_EQ(Rat::parse("-1/5").ceil(), 0);
    EXPECT_EQ(Rat::parse("-1/5").floor(), -1);
    EXPECT_EQ(Rat::parse("16/5").ceil(), 4);
    EXPECT_EQ(Rat(3).ceil(), 3);
    EXPECT_THROW(Rat(1) / Rat(0), InvalidInput);
}

TEST(Rat, RereducingChangesNothing) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-1000, 1000), den(1, 1000);
    for (int i = 0; i < 500; ++i) {
        Rat a(BigInt(num(rng)), BigInt(den(rng))), b(BigInt(num(rng)), BigInt(den(rng)));
        for (Rat r : {a + b, a - b, a * b}) {
            EXPECT_GT(r.den(), 0);
            EXPECT_EQ(boost::multiprecision::gcd(r.num(), r.den()), 1);
            EXPECT_EQ(Rat(r.num(), r.den()), r);
        }
    }
}

TEST(FracPoly, AddIdentityAndCancellation) {
    FracPoly one{{Rat(0), 1}};
    EXPECT_EQ(one + FracPoly{}, one);

    FracPoly a{{Rat(1, 2), 3}, {Rat(1), 4}};
    FracPoly b{{Rat(1, 2), -3}};
    FracPoly sum = a + b;
    EXPECT_EQ(sum, (FracPoly{{Rat(1), 4}}));
    EXPECT_EQ(sum.size(), 1u);
}

TEST(FracPoly, WeightedClassesSumToDeltaOfDim4Example) {
    FracPoly d0{{Rat(0), 1}, {Rat(1), 1}, {Rat(2), 1}, {Rat(3), 1}, {Rat(4), 1}};
    FracPoly sum = d0 + FracPoly{{Rat(1), 1}} + FracPoly{{Rat(2), 1}} + FracPoly{{Rat(3), 1}} + FracPoly{{Rat(4), 1}};
    EXPECT_EQ(sum, (FracPoly{{Rat(0), 1}, {Rat(1), 2}, {Rat(2), 2}, {Rat(3), 2}, {Rat(4), 2}}));
}

TEST(FracPoly, MulOneMinusZPow) {
    EXPECT_EQ(mul_one_minus_z_pow(FracPoly{{Rat(0), 1}}, 2), (FracPoly{{Rat(0), 1}, {Rat(1), -2}, {Rat(2), 1}}));
    EXPECT_EQ(mul_one_minus_z_pow(FracPoly{{Rat(0), 1}, {Rat(1), 1}}, 1), (FracPoly{{Rat(0), 1}, {Rat(2), -1}}));
    EXPECT_EQ(mul_one_minus_z_pow(FracPoly{{Rat(1, 3), 2}}, 0), (FracPoly{{Rat(1, 3), 2}}));
}

TEST(FracPoly, Reflect) {
    FracPoly sym{{Rat(0), 1}, {Rat(1), 1}, {Rat(2), 1}};
    EXPECT_EQ(reflect(sym, 2), sym);
    EXPECT_EQ(reflect(FracPoly{{Rat(4, 5), 1}}, 4), (FracPoly{{Rat(16, 5), 1}}));
    EXPECT_EQ(reflect(FracPoly{{Rat(0), 1}}, 3), (FracPoly{{Rat(3), 1}}));
}

TEST(FracPoly, Restrict) {
    FracPoly f{{Rat(0), 1}, {Rat(1), 2}, {Rat(2), 1}};
    EXPECT_EQ(restrict_to(f, {Rat(0), Rat(1), false, true}), (FracPoly{{Rat(1), 2}}));
    EXPECT_EQ(restrict_to(f, {Rat(0), Rat(1), true, false}), (FracPoly{{Rat(0), 1}}));
    EXPECT_TRUE(restrict_to(FracPoly{}, {Rat(-5), Rat(5)}).empty());
    EXPECT_THROW(restrict_to(f, {Rat(2), Rat(1)}), InvalidInput);
}

TEST(FracPoly, Total) {
    EXPECT_EQ(total(FracPoly{}), 0);
    EXPECT_EQ(total(FracPoly{{Rat(0), 1}, {Rat(1, 2), 3}, {Rat(1), -1}}), 3);
}

TEST(FracPoly, CanonicalText) {
    FracPoly f{{Rat(1), -2}, {Rat(0), 1}, {Rat(3, 2), 3}};
    EXPECT_EQ(f.to_string(), "1*z^(0) - 2*z^(1) + 3*z^(3/2)");
    EXPECT_EQ(f.to_display(), "1 - 2z + 3z^(3/2)");
    EXPECT_EQ(FracPoly{}.to_string(), "0");
    EXPECT_EQ((FracPoly{{Rat(1, 2), -1}}).to_string(), "-1*z^(1/2)");
    EXPECT_EQ((FracPoly{{Rat(2), 1}}).to_display(), "z^2");
}

TEST(FracPoly, ParseInvertsCanonicalText) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        FracPoly f = random_fracpoly(rng);
        EXPECT_EQ(FracPoly::parse(f.to_string()), f) << f.to_string();
    }
    EXPECT_THROW(FracPoly::parse("3*x^(1)"), InvalidInput);
}

TEST(FracPoly, Properties) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<unsigned> kdist(1, 6);
    std::uniform_int_distribution<int> ndist(0, 9);
    for (int i = 0; i < 300; ++i) {
        FracPoly a = random_fracpoly(rng), b = random_fracpoly(rng), c = random_fracpoly(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(total(mul_one_minus_z_pow(a, kdist(rng))), 0);
        const int n = ndist(rng);
        EXPECT_EQ(reflect(reflect(a, n), n), a);
        for (const auto &[e, coeff] : a + b) EXPECT_NE(coeff, 0);
    }
}

TEST(RatPoly, EvalExamples) {
    const RatPoly l4 = Rat(1, 24) * RatPoly({24, 50, 75, 10, 9});
    EXPECT_EQ(l4.eval(Rat(1)), Rat(7));
    EXPECT_EQ(l4.eval(Rat(0)), Rat(1));
    const RatPoly l3 = Rat(1, 6) * RatPoly({6, 13, 6, 11});
    EXPECT_EQ(l3.eval(Rat(2)), Rat(24));
}

TEST(RatPoly, CanonicalText) {
    EXPECT_EQ((Rat(1, 24) * RatPoly({24, 50, 75, 10, 9})).to_string(), "1/24*(9z^4 + 10z^3 + 75z^2 + 50z + 24)");
    EXPECT_EQ((Rat(1, 24) * RatPoly({0, -2, -1, 2, 1})).to_string(), "1/24*(z^4 + 2z^3 - z^2 - 2z)");
    EXPECT_EQ(RatPoly({1, 3}).to_string(), "(3z + 1)");
    EXPECT_EQ(RatPoly({0, 0, -1}).to_string(), "(-z^2)");
    EXPECT_EQ(RatPoly{}.to_string(), "0");
}

TEST(RatPoly, EvalIsLinear) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    for (int i = 0; i < 300; ++i) {
        RatPoly p = random_ratpoly(rng), q = random_ratpoly(rng);
        Rat x(BigInt(num(rng)), BigInt(den(rng)));
        EXPECT_EQ((p + q).eval(x), p.eval(x) + q.eval(x));
        EXPECT_EQ((p * q).eval(x), p.eval(x) * q.eval(x));
    }
}

TEST(RatPoly, InterpolationRecoversPolynomial) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        RatPoly p = random_ratpoly(rng);
        std::vector<Rat> xs, ys;
        for (int k = 0; k <= std::max(p.degree(), 0); ++k) {
            xs.emplace_back(k);
            ys.push_back(p.eval(Rat(k)));
        }
        EXPECT_EQ(interpolate(xs, ys), p);
    }
}
