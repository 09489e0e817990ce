#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rectlevel/geometry.hpp"

namespace rectlevel {

enum class Orientation { horizontal, vertical };

// Greedy piercing lines with their witness rectangles and the induced floor
// assignment. For the horizontal orientation lines sit on witness top edges
// and floor i holds the rects whose top edge lies in [lines[i-1], lines[i])
// (1-based floors, sentinel closing the last band). The vertical orientation
// mirrors this with right edges.
struct PiercingStructure {
    Orientation axis = Orientation::horizontal;
    std::vector<Coord> lines;       // strictly increasing
    std::vector<RectId> witnesses;  // one per line, pairwise disjoint rects
    Coord sentinel = 0;             // strictly beyond every relevant edge
    std::vector<std::int32_t> floor_of;  // rect id -> floor index 1..q

    std::int64_t line_count() const {
        return static_cast<std::int64_t>(lines.size());
    }
    bool operator==(const PiercingStructure&) const = default;
};

PiercingStructure greedy_lines(const Family& f, Orientation axis);

struct FloorViolation {
    RectId rect = 0;
    std::int32_t floor = 0;
    std::int32_t line = 0;  // offending line index, 1-based
    std::string what;
};

// Every rect must meet its floor's line and no later line.
std::optional<FloorViolation> check_floor_property(const Family& f,
                                                   const PiercingStructure& ps);

inline constexpr int kDefaultExactPackingLimit = 64;

struct PackingResult {
    std::int64_t nu = 0;
    std::vector<RectId> witness;  // one maximum pairwise-disjoint subfamily
};

class PackingLimitError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exact maximum pairwise-disjoint subfamily size via branch and bound over
// bitsets with a greedy clique-cover upper bound. Throws PackingLimitError
// when n exceeds the limit.
PackingResult packing_number_exact(const Family& f,
                                   int exact_limit = kDefaultExactPackingLimit);

struct PackingBounds {
    std::int64_t lower = 0;              // max greedy line count (witnesses)
    std::optional<PackingResult> exact;  // present when within the limit
};

PackingBounds packing_bounds(const Family& f,
                             int exact_limit = kDefaultExactPackingLimit);

}  // namespace rectlevel
