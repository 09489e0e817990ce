#include "rectlevel/geometry.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace rectlevel {

bool intersects(const Rect& a, const Rect& b) {
    return std::max(a.x_min, b.x_min) <= std::min(a.x_max, b.x_max) &&
           std::max(a.y_min, b.y_min) <= std::min(a.y_max, b.y_max);
}

bool contains_interior(const Rect& r, Coord px, Coord py) {
    return r.x_min < px && px < r.x_max && r.y_min < py && py < r.y_max;
}

Family::Family(std::vector<Rect> rects) : rects_(std::move(rects)) {
    for (std::size_t i = 0; i < rects_.size(); ++i) {
        Rect& r = rects_[i];
        r.id = static_cast<RectId>(i);
        if (r.x_min >= r.x_max || r.y_min >= r.y_max) {
            std::ostringstream msg;
            msg << "rect " << i << " has empty extent: [" << r.x_min << ","
                << r.x_max << "]x[" << r.y_min << "," << r.y_max << "]";
            throw InvalidRectError(msg.str());
        }
    }
}

Family Family::from_extents(const std::vector<std::array<Coord, 4>>& spans) {
    std::vector<Rect> rects;
    rects.reserve(spans.size());
    for (const auto& s : spans) {
        rects.push_back(Rect{0, s[0], s[1], s[2], s[3]});
    }
    return Family(std::move(rects));
}

namespace {

struct EdgeEntry {
    Coord value;
    RectId rect;
    bool is_max;
};

std::vector<EdgeEntry> edge_entries(const Family& f, bool x_axis) {
    std::vector<EdgeEntry> entries;
    entries.reserve(2 * f.size());
    for (const Rect& r : f) {
        if (x_axis) {
            entries.push_back({r.x_min, r.id, false});
            entries.push_back({r.x_max, r.id, true});
        } else {
            entries.push_back({r.y_min, r.id, false});
            entries.push_back({r.y_max, r.id, true});
        }
    }
    std::sort(entries.begin(), entries.end(), [](const EdgeEntry& a, const EdgeEntry& b) {
        return std::tie(a.value, a.rect, a.is_max) < std::tie(b.value, b.rect, b.is_max);
    });
    return entries;
}

void collect_collisions(const Family& f, bool x_axis, std::vector<CoordCollision>& out) {
    const auto entries = edge_entries(f, x_axis);
    std::size_t i = 0;
    while (i < entries.size()) {
        std::size_t j = i + 1;
        while (j < entries.size() && entries[j].value == entries[i].value) ++j;
        if (j - i > 1) {
            CoordCollision c;
            c.axis = x_axis ? 'x' : 'y';
            c.value = entries[i].value;
            for (std::size_t t = i; t < j; ++t) {
                c.owners.emplace_back(entries[t].rect, entries[t].is_max);
            }
            out.push_back(std::move(c));
        }
        i = j;
    }
}

const char* edge_name(char axis, bool is_max) {
    if (axis == 'x') return is_max ? "right" : "left";
    return is_max ? "top" : "bottom";
}

}  // namespace

std::string ValidationResult::describe() const {
    if (ok()) return "ok";
    std::ostringstream msg;
    for (std::size_t i = 0; i < collisions.size(); ++i) {
        const CoordCollision& c = collisions[i];
        if (i) msg << "; ";
        msg << c.axis << "=" << c.value << " shared by";
        for (std::size_t t = 0; t < c.owners.size(); ++t) {
            msg << (t ? " and" : "") << " rect " << c.owners[t].first << " "
                << edge_name(c.axis, c.owners[t].second) << " edge";
        }
    }
    return msg.str();
}

ValidationResult validate_general_position(const Family& f) {
    ValidationResult result;
    collect_collisions(f, true, result.collisions);
    collect_collisions(f, false, result.collisions);
    return result;
}

void require_general_position(const Family& f) {
    ValidationResult result = validate_general_position(f);
    if (!result.ok()) {
        std::string what = "family not in general position: " + result.describe();
        throw InvalidFamilyError(what, std::move(result));
    }
}

Family perturb_to_general_position(const Family& f) {
    std::vector<Rect> rects(f.rects());
    for (bool x_axis : {true, false}) {
        const auto entries = edge_entries(f, x_axis);
        for (std::size_t rank = 0; rank < entries.size(); ++rank) {
            const EdgeEntry& e = entries[rank];
            const Coord value = static_cast<Coord>(2 * rank) + (e.is_max ? 1 : 0);
            Rect& r = rects[static_cast<std::size_t>(e.rect)];
            if (x_axis) {
                (e.is_max ? r.x_max : r.x_min) = value;
            } else {
                (e.is_max ? r.y_max : r.y_min) = value;
            }
        }
    }
    return Family(std::move(rects));
}

Family reflect(const Family& f, Axis axis) {
    const bool flip_x = axis == Axis::vertical || axis == Axis::both;
    const bool flip_y = axis == Axis::horizontal || axis == Axis::both;
    std::vector<Rect> rects;
    rects.reserve(f.size());
    for (const Rect& r : f) {
        Rect out = r;
        if (flip_x) {
            out.x_min = -r.x_max;
            out.x_max = -r.x_min;
        }
        if (flip_y) {
            out.y_min = -r.y_max;
            out.y_max = -r.y_min;
        }
        rects.push_back(out);
    }
    return Family(std::move(rects));
}

}  // namespace rectlevel
