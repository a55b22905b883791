#include "ehrspec/ehrhart.hpp"
#include "ehrspec/oracle.hpp"
#include "ehrspec/spectrum.hpp"
#include "support/brute_force.hpp"
#include "support/corpus.hpp"

#include <gtest/gtest.h>

using namespace ehrspec;
using namespace ehrspec::testing;

namespace {

HPolytope hpoly(const std::vector<Point> &simplex_vertices) { return facet_normals(Simplex(simplex_vertices)); }

HPolytope diamond() {
    return HPolytope({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
}

std::vector<BigInt> big(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

RatPoly over(std::int64_t d, std::initializer_list<int> ascending) {
    std::vector<Rat> c;
    for (int x : ascending) c.emplace_back(x);
    return Rat(BigInt(1), BigInt(d)) * RatPoly(std::move(c));
}

} // namespace

TEST(CountDilate, Examples) {
    EXPECT_EQ(count_dilate(hpoly(simplex_11115()), 1).count, 7);
    EXPECT_EQ(count_dilate(hpoly(simplex_11115()), 2).count, 27);
    EXPECT_EQ(count_dilate(hpoly(simplex_2234()), 2).count, 24);
    for (const auto &c : enumerable_simplices()) {
        auto zero = count_dilate(hpoly(c.vertices), 0);
        EXPECT_EQ(zero.count, 1) << c.name;
    }
    auto tri = count_dilate(hpoly(reflexive_triangle()), 1);
    EXPECT_EQ(tri.count, 4);
    EXPECT_EQ(tri.boundary_count, 3);
    EXPECT_EQ(tri.interior_count, 1);
}

TEST(CountDilate, AgreesWithRationalBruteForce) {
    for (const auto &c : enumerable_simplices()) {
        auto h = hpoly(c.vertices);
        for (std::int64_t m = 0; m <= 3; ++m) {
            auto counted = count_dilate(h, m);
            EXPECT_EQ(counted.count, brute_count(c.vertices, m)) << c.name << " m=" << m;
            EXPECT_EQ(counted.count, counted.boundary_count + counted.interior_count);
        }
    }
}

TEST(CountDilate, CapAndOverflowAreTypedErrors) {
    EnumerationOptions tiny{10, 1};
    EXPECT_THROW(count_dilate(hpoly(simplex_11115()), 1, tiny), EnumerationTooLarge);
    EXPECT_THROW(spectrum_by_enumeration(hpoly(simplex_dim9())), EnumerationTooLarge);
    EXPECT_THROW(count_dilate(hpoly(reflexive_triangle()), -1), InvalidInput);
}

TEST(CountDilate, ThreadCountDoesNotChangeResults) {
    for (const auto &c : enumerable_simplices()) {
        auto h = hpoly(c.vertices);
        EnumerationOptions one{100'000'000, 1}, many{100'000'000, 5};
        EXPECT_EQ(count_dilate(h, 3, one), count_dilate(h, 3, many)) << c.name;
        EXPECT_EQ(nu_histogram(h, 3, one).counts, nu_histogram(h, 3, many).counts) << c.name;
    }
}

TEST(NuHistogram, MatchesRationalNewtonFunction) {
    auto h = hpoly(simplex_2234());
    auto hist = nu_histogram(h, 2);
    std::map<Rat, BigInt> direct;
    const auto &vs = h.vertices();
    Point lo(3), hi(3);
    for (std::size_t k = 0; k < 3; ++k) {
        lo[k] = hi[k] = vs[0][k];
        for (const auto &v : vs) {
            lo[k] = std::min(lo[k], v[k]);
            hi[k] = std::max(hi[k], v[k]);
        }
    }
    for (std::int64_t x = 2 * lo[0]; x <= 2 * hi[0]; ++x)
        for (std::int64_t y = 2 * lo[1]; y <= 2 * hi[1]; ++y)
            for (std::int64_t z = 2 * lo[2]; z <= 2 * hi[2]; ++z) {
                Rat nu = newton_nu(h, Point{x, y, z});
                if (nu <= Rat(2)) direct[nu] += 1;
            }
    std::map<Rat, BigInt> from_hist;
    for (const auto &[k, c] : hist.counts) from_hist[hist.nu(k)] = c;
    EXPECT_EQ(direct, from_hist);
}

TEST(WeightedCount, Examples) {
    auto h = hpoly(simplex_11115());
    EXPECT_EQ(weighted_count(h, 1, Rat(-1, 5)), 1);
    EXPECT_EQ(weighted_count(h, 1, Rat(0)), 6);
    EXPECT_THROW(weighted_count(h, 1, Rat(1, 2)), InvalidInput);
    EXPECT_THROW(weighted_count(h, 1, Rat(-1)), InvalidInput);
    for (const auto &c : enumerable_simplices()) {
        auto hp = hpoly(c.vertices);
        auto hist = nu_histogram(hp, 2);
        std::set<Rat> alphas;
        for (const auto &[k, n] : hist.counts) alphas.insert(hist.nu(k) - Rat(hist.nu(k).ceil()));
        for (std::int64_t m = 0; m <= 2; ++m) {
            BigInt sum = 0;
            for (const auto &a : alphas) sum += weighted_count(hist, m, a);
            EXPECT_EQ(sum, hist.dilate(m).count) << c.name;
        }
    }
}

TEST(SpectrumByEnumeration, Examples) {
    EXPECT_EQ(spectrum_by_enumeration(hpoly(triangle_444())),
              (FracPoly{{Rat(0), 1}, {Rat(1, 2), 3}, {Rat(1), 4}, {Rat(3, 2), 3}, {Rat(2), 1}}));
    EXPECT_EQ(spectrum_by_enumeration(hpoly(simplex_11115())),
              spectrum_reduced_simplex(WeightVector{big({1, 1, 1, 1, 5})}));
    EXPECT_EQ(spectrum_by_enumeration(diamond()), (FracPoly{{Rat(0), 1}, {Rat(1), 2}, {Rat(2), 1}}));
}

TEST(SpectrumByEnumeration, TruncatedSeriesTimesOneMinusZSquared) {
    // Sum_v z^nu(v) over 2P for the non-reduced triangle, times (1-z)^2,
    // restricted to exponents <= 2.
    auto hist = nu_histogram(hpoly(triangle_444()), 2);
    FracPoly series;
    for (const auto &[k, c] : hist.counts) series.add_term(hist.nu(k), c);
    FracPoly full = mul_one_minus_z_pow(series, 2);
    EXPECT_EQ(restrict_to(full, {Rat(0), Rat(2)}),
              (FracPoly{{Rat(0), 1}, {Rat(1, 2), 3}, {Rat(1), 4}, {Rat(3, 2), 3}, {Rat(2), 1}}));
}

TEST(EhrhartByInterpolation, Examples) {
    EXPECT_EQ(ehrhart_by_interpolation(hpoly(simplex_11115())), over(24, {24, 50, 75, 10, 9}));
    EXPECT_EQ(ehrhart_by_interpolation(hpoly(simplex_2234())), over(6, {6, 13, 6, 11}));
    EXPECT_EQ(ehrhart_by_interpolation(hpoly(reflexive_triangle())), over(2, {2, 3, 3}));
}

TEST(DeltaBySeries, Examples) {
    EXPECT_EQ(delta_by_series(hpoly(simplex_11115())), big({1, 2, 2, 2, 2}));
    EXPECT_EQ(delta_by_series(hpoly(reflexive_triangle())), big({1, 1, 1}));
    auto standard = simplex_halfspaces({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    EXPECT_EQ(delta_from_counts(dilate_counts(standard, 3), 3), big({1, 0, 0, 0}));
}

TEST(ToricOracle, MordellPommersheimTetrahedra) {
    for (auto abc : std::vector<std::vector<std::int64_t>>{{2, 3, 3}, {1, 1, 1}, {2, 2, 5}, {3, 4, 5}}) {
        std::vector<Point> vs{{0, 0, 0}, {abc[0], 0, 0}, {0, abc[1], 0}, {0, 0, abc[2]}};
        auto delta = spectrum_to_delta(toric_spectrum_box(abc), 3);
        RatPoly l = delta_to_ehrhart(delta, 3);
        auto hs = simplex_halfspaces(vs);
        for (std::int64_t m = 0; m <= 4; ++m) {
            EXPECT_EQ(l.eval(Rat(m)), Rat(count_dilate(hs, m).count));
            EXPECT_EQ(l.eval(Rat(m)), Rat(brute_count(vs, m)));
        }
    }
}

TEST(ToricOracle, ReeveVariant) {
    for (std::int64_t h = 2; h <= 15; ++h) {
        std::vector<Point> vs{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, h}};
        RatPoly l = delta_to_ehrhart(spectrum_to_delta(toric_spectrum_reeve(h), 3), 3);
        for (std::int64_t m = 0; m <= 4; ++m) EXPECT_EQ(l.eval(Rat(m)), Rat(brute_count(vs, m))) << "h=" << h;
        // 3! vol equals the number of spectrum terms.
        EXPECT_EQ(l.leading() * Rat(6), Rat(total(toric_spectrum_reeve(h))));
    }
}

TEST(SimplexHalfspaces, RejectsDegenerate) {
    EXPECT_THROW(simplex_halfspaces({{0, 0}, {1, 1}, {2, 2}}), DegenerateSimplex);
}
