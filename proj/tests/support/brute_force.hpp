#pragma once

// Test-only oracles that avoid the library's integer-scaled halfspaces:
// facets come from exhaustive supporting-hyperplane search and membership is
// decided in exact rationals.

#include "ehrspec/geometry.hpp"
#include "ehrspec/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace ehrspec::testing {

struct Halfspace {
    RatVector a;
    Rat b; // a . x <= b
};

/// Facet halfspaces of conv(points) for a full-dimensional point set.
inline std::vector<Halfspace> supporting_halfspaces(const std::vector<Point> &points) {
    const std::size_t n = points.at(0).size();
    std::vector<Halfspace> out;
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    const std::size_t total = points.size();
    while (true) {
        Matrix<Rat> diffs;
        for (std::size_t k = 1; k < n; ++k) {
            RatVector d(n);
            for (std::size_t c = 0; c < n; ++c) d[c] = Rat(points[idx[k]][c] - points[idx[0]][c]);
            diffs.push_back(d);
        }
        auto basis = nullspace(diffs, n);
        if (basis.size() == 1) {
            RatVector a = basis[0];
            Rat b = dot(a, points[idx[0]]);
            bool le = true, ge = true;
            for (const auto &p : points) {
                Rat v = dot(a, p);
                le = le && v <= b;
                ge = ge && v >= b;
            }
            if (ge && !le) {
                for (auto &c : a) c = -c;
                b = -b;
                le = true;
            }
            if (le) {
                // Normalize so duplicates compare equal: scale to b = +-1 or first nonzero = +-1.
                Rat scale = b.is_zero() ? Rat(0) : b.abs();
                if (scale.is_zero())
                    for (const auto &c : a)
                        if (!c.is_zero()) {
                            scale = c.abs();
                            break;
                        }
                for (auto &c : a) c /= scale;
                b /= scale;
                bool seen = std::any_of(out.begin(), out.end(), [&](const Halfspace &h) { return h.a == a && h.b == b; });
                if (!seen) out.push_back({a, b});
            }
        }
        std::size_t i = n;
        while (i > 0 && idx[i - 1] == total - n + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

/// #(m conv(points) ∩ Z^n) by a rational scan of the dilated bounding box.
inline BigInt brute_count(const std::vector<Point> &points, std::int64_t m) {
    const auto hs = supporting_halfspaces(points);
    const std::size_t n = points[0].size();
    Point lo = points[0], hi = points[0];
    for (const auto &p : points)
        for (std::size_t k = 0; k < n; ++k) {
            lo[k] = std::min(lo[k], p[k]);
            hi[k] = std::max(hi[k], p[k]);
        }
    for (std::size_t k = 0; k < n; ++k) {
        lo[k] *= m;
        hi[k] *= m;
    }
    BigInt count = 0;
    Point x = lo;
    while (true) {
        bool inside = std::all_of(hs.begin(), hs.end(), [&](const Halfspace &h) { return dot(h.a, x) <= h.b * Rat(m); });
        if (inside) ++count;
        std::size_t k = n;
        while (k-- > 0) {
            if (x[k] < hi[k]) {
                ++x[k];
                break;
            }
            x[k] = lo[k];
            if (k == 0) return count;
        }
    }
}

/// Is x in m * conv(vertices) for a simplex? Decided via barycentric
/// coordinates of x/m, which never touches facet normals.
inline bool in_dilated_simplex(const std::vector<Point> &vertices, const Point &x, std::int64_t m) {
    const std::size_t n = x.size();
    Matrix<Rat> a(n + 1, RatVector(n + 1));
    RatVector b(n + 1);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i <= n; ++i) a[k][i] = Rat(vertices[i][k]);
        b[k] = Rat(x[k]);
    }
    for (std::size_t i = 0; i <= n; ++i) a[n][i] = 1;
    b[n] = Rat(m);
    auto lambda = solve(a, b);
    return std::all_of(lambda->begin(), lambda->end(), [](const Rat &l) { return l.sign() >= 0; });
}

} // namespace ehrspec::testing
