#pragma once

#include "ehrspec/errors.hpp"
#include "ehrspec/geometry.hpp"

#include <optional>
#include <random>

namespace ehrspec {

/// Rejection-samples a reduced lattice simplex with coordinates in
/// [-max_coord, max_coord] and the origin in its interior.
inline std::optional<Simplex> random_reduced_simplex(std::mt19937_64 &rng, std::size_t dim, std::int64_t max_coord,
                                                     std::size_t max_tries = 100'000) {
    std::uniform_int_distribution<std::int64_t> coord(-max_coord, max_coord);
    for (std::size_t t = 0; t < max_tries; ++t) {
        std::vector<Point> vs(dim + 1, Point(dim));
        for (auto &v : vs)
            for (auto &c : v) c = coord(rng);
        try {
            Simplex s(std::move(vs));
            if (is_reduced(s.weight())) return s;
        } catch (const ValidationError &) {
        }
    }
    return std::nullopt;
}

} // namespace ehrspec
