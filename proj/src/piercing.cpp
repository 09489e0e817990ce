#include "rectlevel/piercing.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>

namespace rectlevel {

namespace {

// Horizontal lines live on top edges and advance past bottom edges;
// vertical lines mirror this with right/left edges.
Coord hi_edge(const Rect& r, Orientation axis) {
    return axis == Orientation::horizontal ? r.y_max : r.x_max;
}

Coord lo_edge(const Rect& r, Orientation axis) {
    return axis == Orientation::horizontal ? r.y_min : r.x_min;
}

}  // namespace

PiercingStructure greedy_lines(const Family& f, Orientation axis) {
    require_general_position(f);
    PiercingStructure ps;
    ps.axis = axis;
    ps.floor_of.assign(f.size(), 0);
    if (f.empty()) {
        ps.sentinel = 1;
        return ps;
    }

    std::vector<RectId> order(f.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](RectId a, RectId b) {
        return hi_edge(f[static_cast<std::size_t>(a)], axis) <
               hi_edge(f[static_cast<std::size_t>(b)], axis);
    });

    // Scanning by increasing relevant edge, the first rect lying strictly
    // past the last line is exactly the greedy witness.
    for (RectId id : order) {
        const Rect& r = f[static_cast<std::size_t>(id)];
        if (ps.lines.empty() || lo_edge(r, axis) > ps.lines.back()) {
            ps.lines.push_back(hi_edge(r, axis));
            ps.witnesses.push_back(id);
        }
    }
    ps.sentinel = hi_edge(f[static_cast<std::size_t>(order.back())], axis) + 1;

    for (const Rect& r : f) {
        const auto it = std::upper_bound(ps.lines.begin(), ps.lines.end(),
                                         hi_edge(r, axis));
        ps.floor_of[static_cast<std::size_t>(r.id)] =
            static_cast<std::int32_t>(it - ps.lines.begin());
    }
    return ps;
}

std::optional<FloorViolation> check_floor_property(const Family& f,
                                                   const PiercingStructure& ps) {
    const std::int64_t q = ps.line_count();
    for (const Rect& r : f) {
        const std::int32_t floor = ps.floor_of[static_cast<std::size_t>(r.id)];
        if (floor < 1 || floor > q) {
            std::ostringstream msg;
            msg << "rect " << r.id << " has floor " << floor << " outside 1.." << q;
            return FloorViolation{r.id, floor, 0, msg.str()};
        }
        const Coord lo = lo_edge(r, ps.axis);
        const Coord hi = hi_edge(r, ps.axis);
        const Coord own_line = ps.lines[static_cast<std::size_t>(floor - 1)];
        if (!(lo <= own_line && own_line <= hi)) {
            std::ostringstream msg;
            msg << "rect " << r.id << " misses its floor line " << floor << " at "
                << own_line;
            return FloorViolation{r.id, floor, floor, msg.str()};
        }
        for (std::int64_t j = floor + 1; j <= q; ++j) {
            const Coord line = ps.lines[static_cast<std::size_t>(j - 1)];
            if (line > hi) break;  // lines increase
            if (line >= lo) {
                std::ostringstream msg;
                msg << "rect " << r.id << " on floor " << floor
                    << " still meets line " << j << " at " << line;
                return FloorViolation{r.id, floor, static_cast<std::int32_t>(j),
                                      msg.str()};
            }
        }
    }
    return std::nullopt;
}

namespace {

// Max independent set over <= 64 vertices: branch and bound with a greedy
// clique-cover upper bound.
class MisSolver {
  public:
    explicit MisSolver(const std::vector<std::uint64_t>& adj) : adj_(adj) {}

    void run() {
        const std::uint64_t all =
            adj_.empty() ? 0 : (adj_.size() == 64 ? ~std::uint64_t{0}
                                                  : (std::uint64_t{1} << adj_.size()) - 1);
        expand(all, 0, 0);
    }

    int best() const { return best_; }
    std::uint64_t best_set() const { return best_set_; }

  private:
    int clique_cover_bound(std::uint64_t cand) const {
        int cliques = 0;
        std::uint64_t rest = cand;
        while (rest) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint64_t common = adj_[static_cast<std::size_t>(v)] & rest;
            while (common) {
                const int u = std::countr_zero(common);
                rest &= ~(std::uint64_t{1} << u);
                common &= adj_[static_cast<std::size_t>(u)] & rest;
            }
            ++cliques;
        }
        return cliques;
    }

    void expand(std::uint64_t cand, std::uint64_t chosen, int size) {
        if (cand == 0) {
            if (size > best_) {
                best_ = size;
                best_set_ = chosen;
            }
            return;
        }
        if (size + clique_cover_bound(cand) <= best_) return;

        // branch on the candidate with the most candidate neighbours
        int branch = -1;
        int branch_degree = -1;
        for (std::uint64_t rest = cand; rest;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            const int deg =
                std::popcount(adj_[static_cast<std::size_t>(v)] & cand);
            if (deg > branch_degree) {
                branch_degree = deg;
                branch = v;
            }
        }
        const std::uint64_t bit = std::uint64_t{1} << branch;
        expand(cand & ~adj_[static_cast<std::size_t>(branch)] & ~bit, chosen | bit,
               size + 1);
        expand(cand & ~bit, chosen, size);
    }

    const std::vector<std::uint64_t>& adj_;
    int best_ = 0;
    std::uint64_t best_set_ = 0;
};

}  // namespace

PackingResult packing_number_exact(const Family& f, int exact_limit) {
    require_general_position(f);
    const std::size_t n = f.size();
    if (exact_limit > 64) exact_limit = 64;
    if (n > static_cast<std::size_t>(exact_limit)) {
        std::ostringstream msg;
        msg << "exact packing number unavailable for n=" << n << " (limit "
            << exact_limit << "); use packing_bounds";
        throw PackingLimitError(msg.str());
    }
    if (n == 0) return PackingResult{0, {}};

    std::vector<std::uint64_t> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (intersects(f[i], f[j])) {
                adj[i] |= std::uint64_t{1} << j;
                adj[j] |= std::uint64_t{1} << i;
            }
        }
    }
    MisSolver solver(adj);
    solver.run();
    PackingResult result;
    result.nu = solver.best();
    for (std::uint64_t set = solver.best_set(); set;) {
        const int v = std::countr_zero(set);
        set &= set - 1;
        result.witness.push_back(static_cast<RectId>(v));
    }
    return result;
}

PackingBounds packing_bounds(const Family& f, int exact_limit) {
    PackingBounds bounds;
    const PiercingStructure horizontal = greedy_lines(f, Orientation::horizontal);
    const PiercingStructure vertical = greedy_lines(f, Orientation::vertical);
    bounds.lower = std::max(horizontal.line_count(), vertical.line_count());
    if (f.size() <= static_cast<std::size_t>(std::min(exact_limit, 64))) {
        bounds.exact = packing_number_exact(f, exact_limit);
    }
    return bounds;
}

}  // namespace rectlevel
