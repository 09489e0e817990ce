#pragma once

#include <array>
#include <vector>

#include "rectlevel/arrangement.hpp"
#include "rectlevel/geometry.hpp"

namespace rectlevel::test {

inline Family fam(const std::vector<std::array<Coord, 4>>& spans) {
    return Family::from_extents(spans);
}

// Smallest known family on which two records of one (a, line) pair share a
// depth: lines land on x=5 and x=13; the vertices (10,10) and (5,10) both
// resolve to the x=5 line at depth 1.
inline Family depth_tie_family() {
    return fam({{-10, 0, 30, 10}, {-1, 5, 10, 15}, {-2, 4, 5, 16}, {6, 3, 13, 17}});
}

inline std::int32_t rescan_depth(const Family& f, Coord x, Coord y) {
    std::int32_t depth = 0;
    for (const Rect& r : f) {
        if (contains_interior(r, x, y)) ++depth;
    }
    return depth;
}

// Union membership for points at thirds offsets, in 3x scaled integers.
inline bool union_covers_scaled(const Family& f, Coord px3, Coord py3) {
    for (const Rect& r : f) {
        if (3 * r.x_min <= px3 && px3 <= 3 * r.x_max && 3 * r.y_min <= py3 &&
            py3 <= 3 * r.y_max) {
            return true;
        }
    }
    return false;
}

inline bool on_union_boundary(const Family& f, const Vertex& v) {
    bool some_uncovered = false;
    bool some_covered = false;
    for (Coord dx : {-1, 1}) {
        for (Coord dy : {-1, 1}) {
            const bool covered = union_covers_scaled(f, 3 * v.x + dx, 3 * v.y + dy);
            some_uncovered = some_uncovered || !covered;
            some_covered = some_covered || covered;
        }
    }
    return some_uncovered && some_covered;
}

}  // namespace rectlevel::test
