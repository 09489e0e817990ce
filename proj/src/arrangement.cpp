#include "rectlevel/arrangement.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace rectlevel {

const char* vertex_kind_name(VertexKind k) {
    switch (k) {
        case VertexKind::top_right: return "top_right";
        case VertexKind::top_left: return "top_left";
        case VertexKind::bottom_right: return "bottom_right";
        case VertexKind::bottom_left: return "bottom_left";
    }
    return "?";
}

VertexKind vertex_kind(HorizontalEdge h, VerticalEdge v) {
    if (h == HorizontalEdge::top) {
        return v == VerticalEdge::right ? VertexKind::top_right : VertexKind::top_left;
    }
    return v == VerticalEdge::right ? VertexKind::bottom_right : VertexKind::bottom_left;
}

bool vertex_order_less(const Vertex& a, const Vertex& b) {
    return std::tie(a.x, a.y, a.h_owner, a.v_owner) <
           std::tie(b.x, b.y, b.h_owner, b.v_owner);
}

std::int64_t ArrangementProfile::level_complexity(int k) const {
    if (k < 0) throw std::invalid_argument("level_complexity requires k >= 0");
    std::int64_t total = 0;
    const std::size_t top = std::min<std::size_t>(depth_histogram.size(),
                                                  static_cast<std::size_t>(k) + 1);
    for (std::size_t d = 0; d < top; ++d) total += depth_histogram[d];
    return total;
}

std::int64_t level_complexity(const ArrangementProfile& p, int k) {
    return p.level_complexity(k);
}

ArrangementProfile ArrangementProfile::from_vertices(std::vector<Vertex> verts) {
    std::sort(verts.begin(), verts.end(), vertex_order_less);
    ArrangementProfile prof;
    std::int32_t max_depth = -1;
    for (const Vertex& v : verts) max_depth = std::max(max_depth, v.depth);
    prof.depth_histogram.assign(static_cast<std::size_t>(max_depth + 1), 0);
    for (auto& counts : prof.per_type_counts) {
        counts.assign(static_cast<std::size_t>(max_depth + 1), 0);
    }
    for (const Vertex& v : verts) {
        prof.depth_histogram[static_cast<std::size_t>(v.depth)] += 1;
        prof.per_type_counts[static_cast<std::size_t>(v.kind())]
                            [static_cast<std::size_t>(v.depth)] += 1;
    }
    prof.union_complexity = prof.depth_histogram.empty() ? 0 : prof.depth_histogram[0];
    prof.vertices = std::move(verts);
    return prof;
}

ArrangementProfile enumerate_vertices_oracle(const Family& f) {
    require_general_position(f);
    std::vector<Vertex> verts;
    for (const Rect& p : f) {
        for (const Rect& q : f) {
            if (p.id == q.id) continue;
            for (HorizontalEdge he : {HorizontalEdge::bottom, HorizontalEdge::top}) {
                const Coord hy = he == HorizontalEdge::top ? p.y_max : p.y_min;
                if (!(q.y_min < hy && hy < q.y_max)) continue;
                for (VerticalEdge ve : {VerticalEdge::left, VerticalEdge::right}) {
                    const Coord vx = ve == VerticalEdge::right ? q.x_max : q.x_min;
                    if (!(p.x_min < vx && vx < p.x_max)) continue;
                    std::int32_t depth = 0;
                    for (const Rect& r : f) {
                        if (contains_interior(r, vx, hy)) ++depth;
                    }
                    verts.push_back(Vertex{vx, hy, p.id, he, q.id, ve, depth});
                }
            }
        }
    }
    return ArrangementProfile::from_vertices(std::move(verts));
}

namespace {

// Fenwick tree with range add and point query over [0, size).
class RangeAddCounter {
  public:
    explicit RangeAddCounter(std::size_t size) : tree_(size + 1, 0) {}

    void add(std::size_t lo, std::size_t hi, std::int32_t delta) {
        if (lo > hi) return;  // empty open range
        bump(lo, delta);
        bump(hi + 1, -delta);
    }

    std::int32_t at(std::size_t pos) const {
        std::int32_t sum = 0;
        for (std::size_t i = pos + 1; i > 0; i -= i & (~i + 1)) {
            sum += tree_[i - 1];
        }
        return sum;
    }

  private:
    void bump(std::size_t pos, std::int32_t delta) {
        for (std::size_t i = pos + 1; i <= tree_.size(); i += i & (~i + 1)) {
            tree_[i - 1] += delta;
        }
    }

    std::vector<std::int32_t> tree_;
};

}  // namespace

ArrangementProfile analyze_sweep(const Family& f) {
    require_general_position(f);
    const std::size_t n = f.size();

    std::vector<Coord> y_coords;
    y_coords.reserve(2 * n);
    for (const Rect& r : f) {
        y_coords.push_back(r.y_min);
        y_coords.push_back(r.y_max);
    }
    std::sort(y_coords.begin(), y_coords.end());
    const auto y_rank = [&](Coord y) {
        return static_cast<std::size_t>(
            std::lower_bound(y_coords.begin(), y_coords.end(), y) - y_coords.begin());
    };

    // Each y value belongs to exactly one horizontal edge.
    struct EdgeRef {
        RectId owner = 0;
        HorizontalEdge edge = HorizontalEdge::bottom;
    };
    std::vector<EdgeRef> edge_at(2 * n);
    for (const Rect& r : f) {
        edge_at[y_rank(r.y_min)] = {r.id, HorizontalEdge::bottom};
        edge_at[y_rank(r.y_max)] = {r.id, HorizontalEdge::top};
    }

    struct Event {
        Coord x;
        RectId rect;
        bool is_left;
    };
    std::vector<Event> events;
    events.reserve(2 * n);
    for (const Rect& r : f) {
        events.push_back({r.x_min, r.id, true});
        events.push_back({r.x_max, r.id, false});
    }
    std::sort(events.begin(), events.end(),
              [](const Event& a, const Event& b) { return a.x < b.x; });

    std::set<std::size_t> active_edges;  // y-ranks of active horizontal edges
    RangeAddCounter depth(2 * n);        // active rects stabbing each y-rank
    std::vector<Vertex> verts;

    const auto activate = [&](const Rect& r) {
        const std::size_t lo = y_rank(r.y_min);
        const std::size_t hi = y_rank(r.y_max);
        active_edges.insert(lo);
        active_edges.insert(hi);
        depth.add(lo + 1, hi - 1, 1);
    };
    const auto deactivate = [&](const Rect& r) {
        const std::size_t lo = y_rank(r.y_min);
        const std::size_t hi = y_rank(r.y_max);
        active_edges.erase(lo);
        active_edges.erase(hi);
        depth.add(lo + 1, hi - 1, -1);
    };
    const auto emit_crossings = [&](const Rect& q, Coord x, VerticalEdge side) {
        const std::size_t lo = y_rank(q.y_min);
        const std::size_t hi = y_rank(q.y_max);
        for (auto it = active_edges.upper_bound(lo); it != active_edges.end() && *it < hi;
             ++it) {
            const std::size_t rank = *it;
            const EdgeRef& e = edge_at[rank];
            verts.push_back(Vertex{x, y_coords[rank], e.owner, e.edge, q.id, side,
                                   depth.at(rank)});
        }
    };

    for (const Event& ev : events) {
        const Rect& r = f[static_cast<std::size_t>(ev.rect)];
        if (ev.is_left) {
            emit_crossings(r, ev.x, VerticalEdge::left);
            activate(r);
        } else {
            deactivate(r);
            emit_crossings(r, ev.x, VerticalEdge::right);
        }
    }
    return ArrangementProfile::from_vertices(std::move(verts));
}

}  // namespace rectlevel
