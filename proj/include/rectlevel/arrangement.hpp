#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rectlevel/geometry.hpp"

namespace rectlevel {

enum class HorizontalEdge : std::uint8_t { bottom, top };
enum class VerticalEdge : std::uint8_t { left, right };

// Crossing type keyed by the pair (horizontal edge role, vertical edge role).
// top_right is the crossing that forms the rightmost-upmost corner of the
// intersection of the two rectangles.
enum class VertexKind : std::uint8_t {
    top_right = 0,
    top_left = 1,
    bottom_right = 2,
    bottom_left = 3,
};

inline constexpr std::array<VertexKind, 4> kAllVertexKinds = {
    VertexKind::top_right, VertexKind::top_left, VertexKind::bottom_right,
    VertexKind::bottom_left};

const char* vertex_kind_name(VertexKind k);
VertexKind vertex_kind(HorizontalEdge h, VerticalEdge v);

// Boundary crossing of two rectangles. The point lies strictly inside both
// named edges and depth counts the other rectangles whose interior covers it.
struct Vertex {
    Coord x = 0;
    Coord y = 0;
    RectId h_owner = 0;
    HorizontalEdge h_edge = HorizontalEdge::bottom;
    RectId v_owner = 0;
    VerticalEdge v_edge = VerticalEdge::left;
    std::int32_t depth = 0;

    VertexKind kind() const { return vertex_kind(h_edge, v_edge); }
    bool operator==(const Vertex&) const = default;
};

// (x, y, h_owner, v_owner) order used for all reproducible output.
bool vertex_order_less(const Vertex& a, const Vertex& b);

struct ArrangementProfile {
    std::vector<Vertex> vertices;               // sorted by vertex_order_less
    std::vector<std::int64_t> depth_histogram;  // index = depth
    std::int64_t union_complexity = 0;          // = depth_histogram[0]
    // per_type_counts[kind][depth]; each vector sized like depth_histogram.
    std::array<std::vector<std::int64_t>, 4> per_type_counts{};

    std::int64_t vertex_count() const {
        return static_cast<std::int64_t>(vertices.size());
    }
    // |Y_<=k|: vertices of depth at most k. Requires k >= 0.
    std::int64_t level_complexity(int k) const;
    bool operator==(const ArrangementProfile&) const = default;

    static ArrangementProfile from_vertices(std::vector<Vertex> verts);
};

// Reference engine: tests every ordered (horizontal edge, vertical edge)
// pair and computes depths by full containment scans. Quadratic in n plus
// a linear scan per vertex.
ArrangementProfile enumerate_vertices_oracle(const Family& f);

// Sweep engine with identical output, O((n + V) log n): a left-to-right
// pass over vertical edges querying the active horizontal-edge set, with a
// rank-indexed counter answering depth queries.
ArrangementProfile analyze_sweep(const Family& f);

std::int64_t level_complexity(const ArrangementProfile& p, int k);

}  // namespace rectlevel
