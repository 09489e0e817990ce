#pragma once

#include <cstdint>

#include "rectlevel/geometry.hpp"

namespace rectlevel {

// m horizontal and m vertical thin slabs, every horizontal crossing every
// vertical in a four-vertex configuration. n = 2m, packing number m,
// union complexity 4m^2.
Family gen_grid(std::int64_t m);

// m rectangles sharing a common interior point, each strictly taller and
// thinner than its successor. Packing number 1.
Family gen_staircase(std::int64_t m);

// Disjoint union of an n/2 staircase and an n/2 grid block built from
// (p-2)+(p-2) base slabs with n/(4(p-2)) nested copies each. Requires
// p >= 3 and 4(p-2) | n. Packing number p-1.
Family gen_tightness(std::int64_t n, std::int64_t p);

// Seeded random family over 2n distinct x ranks and 2n distinct y ranks.
// span = 0 pairs ranks uniformly; span = w > 0 draws each upper rank from
// the available ranks at distance <= w above the lower one (nearest
// available as fallback), giving rank-width control.
Family gen_random(std::int64_t n, std::uint64_t seed, std::int64_t span = 0);

// n rectangles split among `clusters` pairwise-disjoint cells; inside a
// cell all rectangles share a common interior point. Packing number is
// exactly `clusters`.
Family gen_clustered(std::int64_t n, std::int64_t clusters, std::uint64_t seed);

}  // namespace rectlevel
