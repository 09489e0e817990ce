#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rectlevel {

using Coord = std::int64_t;
using RectId = std::int32_t;

// Coordinates are exact integers; keep them small enough that every
// comparison and rank computation stays exact.
inline constexpr Coord kCoordLimit = Coord{1} << 60;

// Mirror axis for reflections; `both` composes the two mirrors.
enum class Axis { horizontal, vertical, both };

// Closed axis-parallel rectangle with integer edges and nonempty interior.
struct Rect {
    RectId id = 0;
    Coord x_min = 0;
    Coord y_min = 0;
    Coord x_max = 0;
    Coord y_max = 0;

    Coord width() const { return x_max - x_min; }
    Coord height() const { return y_max - y_min; }
    bool operator==(const Rect&) const = default;
};

// Closed overlap test; under the enforced general position equality of
// edges never occurs, so closed and open overlap coincide.
bool intersects(const Rect& a, const Rect& b);

// Strict interior containment of a point.
bool contains_interior(const Rect& r, Coord px, Coord py);

class InvalidRectError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Ordered collection of rectangles; ids are densely reassigned by position.
class Family {
  public:
    Family() = default;
    explicit Family(std::vector<Rect> rects);

    // spans are {x_min, y_min, x_max, y_max} per rectangle.
    static Family from_extents(const std::vector<std::array<Coord, 4>>& spans);

    std::size_t size() const { return rects_.size(); }
    bool empty() const { return rects_.empty(); }
    const Rect& operator[](std::size_t i) const { return rects_[i]; }
    const std::vector<Rect>& rects() const { return rects_; }
    auto begin() const { return rects_.begin(); }
    auto end() const { return rects_.end(); }
    bool operator==(const Family&) const = default;

  private:
    std::vector<Rect> rects_;
};

// One shared coordinate value together with the edges that share it.
struct CoordCollision {
    char axis = 'x';  // 'x' or 'y'
    Coord value = 0;
    // (rect id, true when the rect's max edge owns the value)
    std::vector<std::pair<RectId, bool>> owners;
    bool operator==(const CoordCollision&) const = default;
};

struct ValidationResult {
    std::vector<CoordCollision> collisions;
    bool ok() const { return collisions.empty(); }
    std::string describe() const;
};

// General position here means: all 2n x-edge coordinates pairwise distinct
// and all 2n y-edge coordinates pairwise distinct.
ValidationResult validate_general_position(const Family& f);

class InvalidFamilyError : public std::invalid_argument {
  public:
    InvalidFamilyError(const std::string& what, ValidationResult result)
        : std::invalid_argument(what), result_(std::move(result)) {}
    const ValidationResult& result() const { return result_; }

  private:
    ValidationResult result_;
};

// Throws InvalidFamilyError unless the family is in general position.
void require_general_position(const Family& f);

// Re-embeds every coordinate as 2*rank + (max edge ? 1 : 0), ranked per axis
// with ties broken by (rect id, min edge before max edge). Existing strict
// comparisons are preserved and the output always validates.
Family perturb_to_general_position(const Family& f);

// Mirrors the family across a vertical line (axis = vertical, x -> -x),
// a horizontal line (axis = horizontal, y -> -y), or both.
Family reflect(const Family& f, Axis axis);

}  // namespace rectlevel
