#pragma once

#include "ehrspec/geometry.hpp"

#include <string>
#include <vector>

namespace ehrspec::testing {

struct CorpusEntry {
    std::string name;
    std::vector<Point> vertices;
};

inline std::vector<Point> triangle_112() { return {{1, 0}, {0, 1}, {-1, -2}}; }
inline std::vector<Point> reflexive_triangle() { return {{1, 0}, {0, 1}, {-1, -1}}; }
inline std::vector<Point> simplex_2234() { return {{1, 0, 0}, {0, 2, 0}, {1, 1, 1}, {-3, -5, -2}}; }
inline std::vector<Point> simplex_11115() {
    return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, -1, -5}};
}
// Non-reduced counterexample; the last vertex is (-2,-2) so that the origin
// is interior (with (2,2) it is not).
inline std::vector<Point> triangle_444() { return {{2, 0}, {0, 2}, {-2, -2}}; }

inline std::vector<Point> simplex_dim9() {
    std::vector<Point> vs;
    for (int i = 0; i < 9; ++i) {
        Point e(9, 0);
        e[i] = 1;
        vs.push_back(e);
    }
    Point last(9, -1);
    last[8] = -3;
    vs.push_back(last);
    return vs;
}

// Simplices whose oracle scans stay well inside the default cap.
inline std::vector<CorpusEntry> enumerable_simplices() {
    return {
        {"triangle_112", triangle_112()},
        {"reflexive_triangle", reflexive_triangle()},
        {"simplex_2234", simplex_2234()},
        {"simplex_11115", simplex_11115()},
        {"triangle_444", triangle_444()},
        {"cross_simplex_3d", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}},
        {"triangle_123", {{1, 0}, {0, 1}, {-2, -3}}},
    };
}

} // namespace ehrspec::testing
