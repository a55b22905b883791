#include "support/random_property.hpp"

#include <gtest/gtest.h>

using namespace ehrspec;
using namespace ehrspec::testing;

TEST(RandomSimplices, ClosedFormMatchesOracle) {
    auto out = random_simplex_property(20260101, 120, 6);
    EXPECT_GE(out.simplices, 100u);
    for (const auto &f : out.failures) ADD_FAILURE() << f;
}

TEST(RandomSimplices, BarycentricNuAgreesWithFacets) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> coord(-9, 9);
    for (int t = 0; t < 60; ++t) {
        auto s = random_reduced_simplex(rng, 2 + t % 3, 5);
        ASSERT_TRUE(s.has_value());
        const auto h = facet_normals(*s);
        for (int k = 0; k < 20; ++k) {
            Point x(s->dim());
            for (auto &c : x) c = coord(rng);
            EXPECT_EQ(newton_nu(h, x), nu_barycentric(s->vertices(), s->weight(), x));
        }
    }
}
