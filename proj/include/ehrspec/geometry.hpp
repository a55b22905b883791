#pragma once

#include "ehrspec/errors.hpp"
#include "ehrspec/linalg.hpp"
#include "ehrspec/rat.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace ehrspec {

using Point = std::vector<std::int64_t>;
using RatVector = std::vector<Rat>;

inline std::string to_string(const Point &p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

inline std::string to_string(const RatVector &p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].to_string();
    return s + ")";
}

/// Weights (q_0, ..., q_n) of a lattice simplex, in vertex order.
struct WeightVector {
    std::vector<BigInt> q;

    std::vector<BigInt> sorted() const {
        auto s = q;
        std::sort(s.begin(), s.end());
        return s;
    }
    friend bool operator==(const WeightVector &, const WeightVector &) = default;
};

inline BigInt milnor_number(const WeightVector &w) {
    return std::accumulate(w.q.begin(), w.q.end(), BigInt(0));
}

inline bool is_reduced(const WeightVector &w) {
    BigInt g = 0;
    for (const auto &x : w.q) g = boost::multiprecision::gcd(g, x);
    return g == 1;
}

namespace detail {

inline void check_simplex_shape(std::span<const Point> vertices) {
    if (vertices.size() < 2) throw InvalidInput("a simplex needs at least 2 vertices");
    const std::size_t n = vertices.size() - 1;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].size() != n)
            throw InvalidInput("vertex " + std::to_string(i) + " has dimension " +
                               std::to_string(vertices[i].size()) + ", expected " +
                               std::to_string(n) + " for " + std::to_string(n + 1) + " vertices");
}

// det(v_0, ..., v_{i-1}, v_{i+1}, ..., v_n) for each i, vertices as rows.
inline std::vector<BigInt> maximal_minors(std::span<const Point> vertices) {
    std::vector<BigInt> minors;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        Matrix<BigInt> m;
        for (std::size_t j = 0; j < vertices.size(); ++j) {
            if (j == i) continue;
            m.emplace_back(vertices[j].begin(), vertices[j].end());
        }
        minors.push_back(determinant(std::move(m)));
    }
    return minors;
}

} // namespace detail

/// Barycentric coordinates of the origin with respect to n+1 affinely
/// independent vertices. Throws DegenerateSimplex otherwise.
inline std::vector<Rat> origin_barycentric(std::span<const Point> vertices) {
    detail::check_simplex_shape(vertices);
    const std::size_t n = vertices.size() - 1;
    Matrix<BigInt> a(n + 1, std::vector<BigInt>(n + 1));
    std::vector<BigInt> b(n + 1, 0);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i <= n; ++i) a[k][i] = vertices[i][k];
    for (std::size_t i = 0; i <= n; ++i) a[n][i] = 1;
    b[n] = 1;
    auto lambda = solve(std::move(a), b);
    if (!lambda) throw DegenerateSimplex("vertices are affinely dependent");
    return *lambda;
}

/// q_i = |det(vertices without v_i)|. Rejects affinely dependent vertices and
/// simplices whose interior misses the origin.
inline WeightVector simplex_weight(std::span<const Point> vertices) {
    auto lambda = origin_barycentric(vertices);
    auto minors = detail::maximal_minors(vertices);
    for (std::size_t i = 0; i < minors.size(); ++i) {
        if (minors[i] == 0)
            throw OriginNotInterior("origin lies on the hyperplane of the facet opposite vertex " +
                                    std::to_string(i));
        if (lambda[i].sign() <= 0)
            throw OriginNotInterior("barycentric coordinate " + std::to_string(i) + " of the origin is " +
                                    lambda[i].to_string());
    }
    WeightVector w;
    for (auto &m : minors) w.q.push_back(m < 0 ? BigInt(-m) : m);

    const std::size_t n = vertices.size() - 1;
    for (std::size_t k = 0; k < n; ++k) {
        BigInt s = 0;
        for (std::size_t i = 0; i <= n; ++i) s += w.q[i] * vertices[i][k];
        if (s != 0) throw InternalInconsistency("weighted vertex sum is nonzero in coordinate " + std::to_string(k));
    }
    return w;
}

/// Full-dimensional lattice simplex with the origin in its interior.
class Simplex {
public:
    explicit Simplex(std::vector<Point> vertices)
        : vertices_(std::move(vertices)), weight_(simplex_weight(vertices_)) {}

    std::size_t dim() const { return vertices_.size() - 1; }
    const std::vector<Point> &vertices() const { return vertices_; }
    const WeightVector &weight() const { return weight_; }

private:
    std::vector<Point> vertices_;
    WeightVector weight_;
};

/// Lattice polytope P = { x : <u_F, x> <= 1 for all facets F } together with
/// its vertex list. Construction checks that both descriptions agree.
class HPolytope {
public:
    HPolytope(std::vector<RatVector> facet_normals, std::vector<Point> vertices)
        : normals_(std::move(facet_normals)), vertices_(std::move(vertices)) {
        validate();
    }

    std::size_t dim() const { return vertices_.empty() ? 0 : vertices_[0].size(); }
    const std::vector<RatVector> &facet_normals() const { return normals_; }
    const std::vector<Point> &vertices() const { return vertices_; }

private:
    void validate() const;

    std::vector<RatVector> normals_;
    std::vector<Point> vertices_;
};

inline void HPolytope::validate() const {
    if (vertices_.empty()) throw InvalidPolytope("no vertices");
    const std::size_t n = vertices_[0].size();
    if (n == 0) throw InvalidPolytope("dimension must be positive");
    if (vertices_.size() < n + 1) throw InvalidPolytope("fewer than n+1 vertices");
    if (normals_.size() < n + 1) throw InvalidPolytope("fewer than n+1 facets");
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].size() != n) throw InvalidPolytope("vertex " + std::to_string(i) + " has wrong dimension");
    for (std::size_t f = 0; f < normals_.size(); ++f)
        if (normals_[f].size() != n) throw InvalidPolytope("facet " + std::to_string(f) + " has wrong dimension");

    for (std::size_t f = 0; f < normals_.size(); ++f) {
        std::vector<const Point *> tight;
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            Rat value = dot(normals_[f], vertices_[i]);
            if (value > Rat(1))
                throw InvalidPolytope("vertex " + to_string(vertices_[i]) + " violates facet " + std::to_string(f) +
                                      " (<u,v> = " + value.to_string() + " > 1)");
            if (value == Rat(1)) tight.push_back(&vertices_[i]);
        }
        Matrix<Rat> diffs;
        for (std::size_t k = 1; k < tight.size(); ++k) {
            RatVector d(n);
            for (std::size_t c = 0; c < n; ++c) d[c] = Rat((*tight[k])[c] - (*tight[0])[c]);
            diffs.push_back(std::move(d));
        }
        if (tight.size() < n || rank(diffs) + 1 < n)
            throw InvalidPolytope("facet " + std::to_string(f) + " is attained on fewer than n affinely independent vertices");
    }

    if (rank(normals_) < n) throw InvalidPolytope("facet normals do not span; the polyhedron is unbounded");

    // Guard against combinatorial blow-up of the exhaustive checks below.
    if (binomial(static_cast<std::int64_t>(normals_.size()), static_cast<std::int64_t>(n)) > 2'000'000)
        throw InvalidPolytope("too many facets to validate exhaustively");

    // Enumerate index subsets of size k in lexicographic order.
    auto for_each_subset = [&](std::size_t k, auto &&fn) {
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        const std::size_t total = normals_.size();
        if (k > total) return;
        while (true) {
            fn(idx);
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == total - k + i - 1) --i;
            if (i == 0) return;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    };

    // Extreme rays of the recession cone {d : <u_F, d> <= 0} come from n-1
    // independent tight normals; the cone is trivial iff none survives.
    for_each_subset(n - 1, [&](const std::vector<std::size_t> &idx) {
        Matrix<Rat> rows;
        for (auto f : idx) rows.push_back(normals_[f]);
        auto basis = nullspace(rows, n);
        if (basis.size() != 1) return;
        for (int s : {1, -1}) {
            bool recedes = true;
            for (const auto &u : normals_) {
                Rat v = dot(u, basis[0]) * Rat(s);
                if (v.sign() > 0) {
                    recedes = false;
                    break;
                }
            }
            if (recedes) throw InvalidPolytope("inequality system is unbounded");
        }
    });

    // Every vertex of the inequality system must be a listed vertex.
    for_each_subset(n, [&](const std::vector<std::size_t> &idx) {
        Matrix<Rat> rows;
        for (auto f : idx) rows.push_back(normals_[f]);
        auto x = solve(rows, RatVector(n, Rat(1)));
        if (!x) return;
        for (const auto &u : normals_)
            if (dot(u, *x) > Rat(1)) return;
        bool listed = std::any_of(vertices_.begin(), vertices_.end(), [&](const Point &v) {
            for (std::size_t c = 0; c < n; ++c)
                if ((*x)[c] != Rat(v[c])) return false;
            return true;
        });
        if (!listed) throw InvalidPolytope("inequality system has vertex " + to_string(*x) + " not in the vertex list");
    });

    // And every listed vertex must be a vertex of the inequality system.
    for (const auto &v : vertices_) {
        Matrix<Rat> rows;
        for (const auto &u : normals_)
            if (dot(u, v) == Rat(1)) rows.push_back(u);
        if (rank(rows) < n) throw InvalidPolytope("listed point " + to_string(v) + " is not a vertex");
    }
}

/// H-representation of a simplex: normal i solves <u, v_j> = 1 for j != i.
inline HPolytope facet_normals(const Simplex &s) {
    const auto &vs = s.vertices();
    const std::size_t n = s.dim();
    std::vector<RatVector> normals;
    for (std::size_t i = 0; i <= n; ++i) {
        Matrix<BigInt> a;
        for (std::size_t j = 0; j <= n; ++j)
            if (j != i) a.emplace_back(vs[j].begin(), vs[j].end());
        auto u = solve(std::move(a), std::vector<BigInt>(n, 1));
        if (!u) throw DegenerateSimplex("facet opposite vertex " + std::to_string(i) + " has a singular system");
        normals.push_back(std::move(*u));
    }
    return HPolytope(std::move(normals), vs);
}

/// Newton function: nu(v) = max_F <u_F, v>.
inline Rat newton_nu(const HPolytope &h, const Point &v) {
    if (v.size() != h.dim()) throw InvalidInput("point dimension mismatch");
    const auto &normals = h.facet_normals();
    Rat best = dot(normals[0], v);
    for (std::size_t f = 1; f < normals.size(); ++f) best = std::max(best, dot(normals[f], v));
    return best;
}

/// Vertices of the polar polytope; these are the facet normals.
inline std::vector<RatVector> polar_vertices(const HPolytope &h) { return h.facet_normals(); }

inline bool is_reflexive_geometric(const HPolytope &h) {
    for (const auto &u : h.facet_normals())
        for (const auto &c : u)
            if (!c.is_integer()) return false;
    return true;
}

} // namespace ehrspec
