#pragma once

// Brute-force lattice point enumeration. Deliberately naive: every closed-form
// result in the library is checked against these scans.

#include "ehrspec/frac_poly.hpp"
#include "ehrspec/geometry.hpp"
#include "ehrspec/rat_poly.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <span>
#include <thread>
#include <vector>

namespace ehrspec {

struct EnumerationOptions {
    std::uint64_t cap = 100'000'000; // max candidate box points per scan
    unsigned jobs = 1;
};

/// Lattice polytope as integer halfspaces a_F . x <= b_F plus its vertex
/// bounding box; the dilate mP is a_F . x <= m b_F inside m * box.
struct IntegerHalfspaces {
    std::vector<std::vector<std::int64_t>> a;
    std::vector<std::int64_t> b;
    Point lo;
    Point hi;

    std::size_t dim() const { return lo.size(); }
};

namespace detail {

inline std::int64_t to_int64(const BigInt &v, const char *what) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw EnumerationTooLarge(std::string(what) + " does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

inline void bounding_box(const std::vector<Point> &vertices, Point &lo, Point &hi) {
    lo = hi = vertices.at(0);
    for (const auto &v : vertices)
        for (std::size_t k = 0; k < v.size(); ++k) {
            lo[k] = std::min(lo[k], v[k]);
            hi[k] = std::max(hi[k], v[k]);
        }
}

// Common denominator D of all facet normals, so that D * nu(v) is an integer.
inline BigInt common_denominator(const HPolytope &h) {
    BigInt d = 1;
    for (const auto &u : h.facet_normals())
        for (const auto &c : u) d = boost::multiprecision::lcm(d, c.den());
    return d;
}

// Box of the m-th dilate; throws when it exceeds the cap or risks overflow.
inline void dilate_box(const IntegerHalfspaces &hs, std::int64_t m, const EnumerationOptions &opt, Point &lo,
                       Point &hi) {
    if (m < 0) throw InvalidInput("dilation factor must be nonnegative");
    const std::size_t n = hs.dim();
    lo.resize(n);
    hi.resize(n);
    BigInt volume = 1, reach = 0;
    for (std::size_t k = 0; k < n; ++k) {
        BigInt l = BigInt(hs.lo[k]) * m, u = BigInt(hs.hi[k]) * m;
        volume *= u - l + 1;
        reach = std::max(reach, std::max(BigInt(abs(l)), BigInt(abs(u))));
        lo[k] = to_int64(l, "dilated box");
        hi[k] = to_int64(u, "dilated box");
    }
    if (volume > opt.cap)
        throw EnumerationTooLarge("box of the " + std::to_string(m) + "-th dilate has " + volume.str() +
                                  " points, cap is " + std::to_string(opt.cap));
    const BigInt limit = BigInt(1) << 62;
    for (std::size_t f = 0; f < hs.a.size(); ++f) {
        BigInt worst = 0;
        for (auto c : hs.a[f]) worst += BigInt(c < 0 ? -c : c) * reach;
        if (worst > limit || BigInt(hs.b[f]) * m > limit || -BigInt(hs.b[f]) * m > limit)
            throw EnumerationTooLarge("facet " + std::to_string(f) + " overflows 64-bit scan arithmetic");
    }
}

// Visits every lattice point of [lo, hi]; the first coordinate is split into
// `jobs` contiguous slabs, each with its own accumulator. Accumulators are
// returned in slab order so merging is schedule-independent.
template <class Acc, class Visit>
std::vector<Acc> scan_box(const Point &lo, const Point &hi, unsigned jobs, Visit visit) {
    const std::size_t n = lo.size();
    const std::int64_t width = hi[0] - lo[0] + 1;
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::int64_t>(width, 1024))));
    std::vector<Acc> acc(jobs);

    auto run_slab = [&](unsigned s) {
        Point p = lo;
        const std::int64_t first = lo[0] + width * s / jobs;
        const std::int64_t last = lo[0] + width * (s + 1) / jobs - 1;
        if (first > last) return;
        p[0] = first;
        Acc &a = acc[s];
        while (true) {
            visit(a, std::span<const std::int64_t>(p));
            std::size_t k = n;
            while (k-- > 0) {
                const std::int64_t top = k == 0 ? last : hi[k];
                const std::int64_t bottom = k == 0 ? first : lo[k];
                if (p[k] < top) {
                    ++p[k];
                    break;
                }
                p[k] = bottom;
                if (k == 0) return;
            }
        }
    };

    if (jobs == 1) {
        run_slab(0);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned s = 0; s < jobs; ++s) workers.emplace_back(run_slab, s);
    }
    return acc;
}

inline std::int64_t dot64(const std::vector<std::int64_t> &a, std::span<const std::int64_t> p) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * p[k];
    return s;
}

} // namespace detail

/// Integer form of an origin-interior H-polytope: a_F = D u_F, b_F = D.
inline IntegerHalfspaces integer_halfspaces(const HPolytope &h) {
    IntegerHalfspaces hs;
    const BigInt d = detail::common_denominator(h);
    for (const auto &u : h.facet_normals()) {
        std::vector<std::int64_t> row;
        for (const auto &c : u) row.push_back(detail::to_int64((c * Rat(d)).num(), "scaled facet normal"));
        hs.a.push_back(std::move(row));
        hs.b.push_back(detail::to_int64(d, "facet denominator"));
    }
    detail::bounding_box(h.vertices(), hs.lo, hs.hi);
    return hs;
}

/// Halfspaces of an arbitrary full-dimensional lattice simplex (the origin
/// need not be interior). Facet i is the hyperplane through all v_j, j != i.
inline IntegerHalfspaces simplex_halfspaces(const std::vector<Point> &vertices) {
    if (vertices.size() < 2) throw InvalidInput("a simplex needs at least 2 vertices");
    const std::size_t n = vertices.size() - 1;
    IntegerHalfspaces hs;
    for (std::size_t i = 0; i <= n; ++i) {
        std::vector<const Point *> others;
        for (std::size_t j = 0; j <= n; ++j)
            if (j != i) others.push_back(&vertices[j]);
        Matrix<Rat> diffs;
        for (std::size_t j = 1; j < others.size(); ++j) {
            RatVector d(n);
            for (std::size_t k = 0; k < n; ++k) d[k] = Rat((*others[j])[k] - (*others[0])[k]);
            diffs.push_back(std::move(d));
        }
        auto basis = nullspace(diffs, n);
        if (basis.size() != 1) throw DegenerateSimplex("vertices are affinely dependent");
        BigInt l = 1;
        for (const auto &c : basis[0]) l = boost::multiprecision::lcm(l, c.den());
        std::vector<std::int64_t> a;
        for (const auto &c : basis[0]) a.push_back(detail::to_int64((c * Rat(l)).num(), "facet normal"));
        std::int64_t b = detail::dot64(a, *others[0]);
        const std::int64_t at_opposite = detail::dot64(a, vertices[i]);
        if (at_opposite == b) throw DegenerateSimplex("vertices are affinely dependent");
        if (at_opposite > b) {
            for (auto &c : a) c = -c;
            b = -b;
        }
        hs.a.push_back(std::move(a));
        hs.b.push_back(b);
    }
    detail::bounding_box(vertices, hs.lo, hs.hi);
    return hs;
}

struct DilateCount {
    std::int64_t m = 0;
    BigInt count;
    BigInt boundary_count;
    BigInt interior_count;

    friend bool operator==(const DilateCount &, const DilateCount &) = default;
};

/// #(mP ∩ Z^n), split by whether some facet inequality is tight.
inline DilateCount count_dilate(const IntegerHalfspaces &hs, std::int64_t m, const EnumerationOptions &opt = {}) {
    Point lo, hi;
    detail::dilate_box(hs, m, opt, lo, hi);
    struct Tally {
        std::uint64_t inside = 0, boundary = 0;
    };
    auto slabs = detail::scan_box<Tally>(lo, hi, opt.jobs, [&](Tally &t, std::span<const std::int64_t> p) {
        bool tight = false;
        for (std::size_t f = 0; f < hs.a.size(); ++f) {
            const std::int64_t lhs = detail::dot64(hs.a[f], p), rhs = hs.b[f] * m;
            if (lhs > rhs) return;
            tight = tight || lhs == rhs;
        }
        ++t.inside;
        if (tight) ++t.boundary;
    });
    DilateCount c;
    c.m = m;
    for (const auto &t : slabs) {
        c.count += t.inside;
        c.boundary_count += t.boundary;
    }
    c.interior_count = c.count - c.boundary_count;
    return c;
}

inline DilateCount count_dilate(const HPolytope &h, std::int64_t m, const EnumerationOptions &opt = {}) {
    return count_dilate(integer_halfspaces(h), m, opt);
}

/// Multiplicities of the Newton function over (m_max)P: counts[k] is the
/// number of lattice points with nu(v) = k / denominator.
struct NuHistogram {
    std::int64_t dim = 0;
    std::int64_t m_max = 0;
    std::int64_t denominator = 1;
    std::map<std::int64_t, BigInt> counts;

    Rat nu(std::int64_t k) const { return Rat(BigInt(k), BigInt(denominator)); }

    DilateCount dilate(std::int64_t m) const {
        if (m < 0 || m > m_max) throw InvalidInput("dilate outside the scanned range");
        DilateCount c;
        c.m = m;
        const std::int64_t top = m * denominator;
        for (const auto &[k, n] : counts) {
            if (k > top) break;
            c.count += n;
            if (k == top) c.boundary_count += n;
        }
        c.interior_count = c.count - c.boundary_count;
        return c;
    }
};

inline NuHistogram nu_histogram(const HPolytope &h, std::int64_t m_max, const EnumerationOptions &opt = {}) {
    const IntegerHalfspaces hs = integer_halfspaces(h);
    Point lo, hi;
    detail::dilate_box(hs, m_max, opt, lo, hi);
    NuHistogram hist;
    hist.dim = static_cast<std::int64_t>(h.dim());
    hist.m_max = m_max;
    hist.denominator = hs.b.at(0);
    const std::int64_t top = m_max * hist.denominator;
    using Local = std::map<std::int64_t, std::uint64_t>;
    auto slabs = detail::scan_box<Local>(lo, hi, opt.jobs, [&](Local &local, std::span<const std::int64_t> p) {
        std::int64_t best = detail::dot64(hs.a[0], p);
        for (std::size_t f = 1; f < hs.a.size(); ++f) best = std::max(best, detail::dot64(hs.a[f], p));
        if (best <= top) ++local[best];
    });
    for (const auto &local : slabs)
        for (const auto &[k, n] : local) hist.counts[k] += n;
    return hist;
}

/// Lattice points of mP with nu(v) - ceil(nu(v)) = alpha.
inline BigInt weighted_count(const NuHistogram &hist, std::int64_t m, const Rat &alpha) {
    if (m < 0 || m > hist.m_max) throw InvalidInput("dilate outside the scanned range");
    BigInt c = 0;
    for (const auto &[k, n] : hist.counts) {
        if (k > m * hist.denominator) break;
        Rat v = hist.nu(k);
        if (v - Rat(v.ceil()) == alpha) c += n;
    }
    return c;
}

inline BigInt weighted_count(const HPolytope &h, std::int64_t m, const Rat &alpha, const EnumerationOptions &opt = {}) {
    if (alpha.sign() > 0 || alpha <= Rat(-1)) throw InvalidInput("weight class must lie in ]-1, 0]");
    return weighted_count(nu_histogram(h, m, opt), m, alpha);
}

/// (1 - z)^n sum_v z^nu(v), from the histogram of (n+1)P. Exponents above n
/// are discarded; the window ]n, n+1] must vanish or the scan is inconsistent.
inline FracPoly spectrum_from_histogram(const NuHistogram &hist) {
    const std::int64_t n = hist.dim;
    if (hist.m_max < n + 1) throw InvalidInput("spectrum needs the histogram of (n+1)P");
    const Rat window = Rat(n + 1);
    FracPoly series;
    for (const auto &[k, c] : hist.counts)
        if (hist.nu(k) <= window) series.add_term(hist.nu(k), c);
    FracPoly full = mul_one_minus_z_pow(series, static_cast<unsigned>(n));
    FracPoly spec;
    for (const auto &[e, c] : full) {
        if (e > window) continue;
        if (e > Rat(n))
            throw InternalInconsistency("nonzero spectrum coefficient " + c.str() + " at exponent " + e.to_string() +
                                        " above n");
        if (e.sign() < 0 || c < 0)
            throw InternalInconsistency("invalid spectrum term " + c.str() + "*z^(" + e.to_string() + ")");
        spec.add_term(e, c);
    }
    return spec;
}

inline FracPoly spectrum_by_enumeration(const HPolytope &h, const EnumerationOptions &opt = {}) {
    return spectrum_from_histogram(nu_histogram(h, static_cast<std::int64_t>(h.dim()) + 1, opt));
}

/// Degree <= n interpolant through (m, counts[m]), m = 0..n.
inline RatPoly ehrhart_from_counts(const std::vector<BigInt> &counts) {
    std::vector<Rat> xs, ys;
    for (std::size_t m = 0; m < counts.size(); ++m) {
        xs.emplace_back(static_cast<std::int64_t>(m));
        ys.emplace_back(counts[m]);
    }
    return interpolate(xs, ys);
}

/// delta_j = sum_{i<=j} (-1)^i binom(n+1, i) L(j - i), with counts[m] = L(m).
inline std::vector<BigInt> delta_from_counts(const std::vector<BigInt> &counts, std::int64_t n) {
    if (counts.size() < static_cast<std::size_t>(n) + 1) throw InvalidInput("need counts for m = 0..n");
    std::vector<BigInt> delta(static_cast<std::size_t>(n) + 1, 0);
    for (std::int64_t j = 0; j <= n; ++j)
        for (std::int64_t i = 0; i <= j; ++i) {
            BigInt term = binomial(n + 1, i) * counts[static_cast<std::size_t>(j - i)];
            delta[static_cast<std::size_t>(j)] += i % 2 ? BigInt(-term) : term;
        }
    return delta;
}

inline std::vector<BigInt> dilate_counts(const IntegerHalfspaces &hs, std::int64_t m_max,
                                         const EnumerationOptions &opt = {}) {
    std::vector<BigInt> counts;
    for (std::int64_t m = 0; m <= m_max; ++m) counts.push_back(count_dilate(hs, m, opt).count);
    return counts;
}

inline std::vector<BigInt> dilate_counts(const NuHistogram &hist) {
    std::vector<BigInt> counts;
    for (std::int64_t m = 0; m <= hist.m_max; ++m) counts.push_back(hist.dilate(m).count);
    return counts;
}

inline RatPoly ehrhart_by_interpolation(const HPolytope &h, const EnumerationOptions &opt = {}) {
    const auto n = static_cast<std::int64_t>(h.dim());
    return ehrhart_from_counts(dilate_counts(nu_histogram(h, n, opt)));
}

inline std::vector<BigInt> delta_by_series(const HPolytope &h, const EnumerationOptions &opt = {}) {
    const auto n = static_cast<std::int64_t>(h.dim());
    return delta_from_counts(dilate_counts(nu_histogram(h, n, opt)), n);
}

} // namespace ehrspec
