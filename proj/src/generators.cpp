#include "rectlevel/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace rectlevel {

namespace {

// Deterministic across platforms: mt19937_64 with modulo reduction
// (std::uniform_int_distribution is implementation-defined).
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next(std::uint64_t bound) {
        return bound == 0 ? 0 : engine_() % bound;
    }

    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::swap(values[i - 1], values[static_cast<std::size_t>(next(i))]);
        }
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace

Family gen_grid(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("grid generator requires m >= 1");
    const Coord reach = 100 + 10 * m;  // slab length beyond the crossing zone
    std::vector<Rect> rects;
    rects.reserve(static_cast<std::size_t>(2 * m));
    for (std::int64_t i = 0; i < m; ++i) {
        rects.push_back(Rect{0, -(reach + i), 10 * i + 1, reach + i, 10 * i + 5});
    }
    for (std::int64_t j = 0; j < m; ++j) {
        rects.push_back(Rect{0, 10 * j + 1, -(reach + j), 10 * j + 5, reach + j});
    }
    return Family(std::move(rects));
}

Family gen_staircase(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("staircase generator requires m >= 1");
    std::vector<Rect> rects;
    rects.reserve(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) {
        // widths grow, heights shrink; every rect contains the origin
        rects.push_back(Rect{0, -(i + 1), -(m - i + 1), i + 1, m - i + 1});
    }
    return Family(std::move(rects));
}

Family gen_tightness(std::int64_t n, std::int64_t p) {
    if (p < 3) throw std::invalid_argument("tightness generator requires p >= 3");
    const std::int64_t denom = 4 * (p - 2);
    if (n < denom || n % denom != 0) {
        std::ostringstream msg;
        msg << "4(p-2)=" << denom << " must divide n";
        throw std::invalid_argument(msg.str());
    }
    const std::int64_t g = p - 2;       // base slabs per direction
    const std::int64_t t = n / denom;   // nested copies per slab
    const std::int64_t m = n / 2;       // staircase size
    const Coord band = 2 * t + 2;       // slab band thickness
    const Coord gap = 5;
    const Coord grid_top = (g - 1) * (band + gap) + band;

    std::vector<Rect> rects;
    rects.reserve(static_cast<std::size_t>(n));

    // staircase block, far left and below the grid block
    const Coord shift = -(100 + g * t + 1000 + 3 * m);
    for (std::int64_t i = 0; i < m; ++i) {
        rects.push_back(Rect{0, shift - (i + 1), shift - (m - i + 1),
                             shift + (i + 1), shift + (m - i + 1)});
    }
    // horizontal stacks: copy c of stack i shrinks every edge by c ranks
    for (std::int64_t i = 0; i < g; ++i) {
        const Coord base = i * (band + gap);
        for (std::int64_t c = 0; c < t; ++c) {
            const Coord overhang = 100 + (i * t + t - c);
            rects.push_back(Rect{0, -overhang, base + c, grid_top + overhang,
                                 base + band - c});
        }
    }
    // vertical stacks
    for (std::int64_t j = 0; j < g; ++j) {
        const Coord base = j * (band + gap);
        for (std::int64_t d = 0; d < t; ++d) {
            const Coord overhang = 100 + (j * t + t - d);
            rects.push_back(Rect{0, base + d, -overhang, base + band - d,
                                 grid_top + overhang});
        }
    }
    return Family(std::move(rects));
}

namespace {

// Draws n disjoint rank pairs out of 0..2n-1. span limits the rank width.
std::vector<std::pair<std::int64_t, std::int64_t>> sample_rank_pairs(
    std::int64_t n, SeededRng& rng, std::int64_t span) {
    std::set<std::int64_t> remaining;
    for (std::int64_t r = 0; r < 2 * n; ++r) remaining.insert(r);

    const auto pick_by_value = [&](std::int64_t dart) {
        auto it = remaining.lower_bound(dart);
        if (it == remaining.end()) it = std::prev(remaining.end());
        const std::int64_t value = *it;
        remaining.erase(it);
        return value;
    };

    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    pairs.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        const std::int64_t a =
            pick_by_value(static_cast<std::int64_t>(rng.next(2 * n)));
        std::int64_t b = -1;
        if (span > 0) {
            std::vector<std::int64_t> window;
            for (auto it = remaining.upper_bound(a);
                 it != remaining.end() && *it <= a + span; ++it) {
                window.push_back(*it);
            }
            if (!window.empty()) {
                b = window[static_cast<std::size_t>(rng.next(window.size()))];
                remaining.erase(b);
            } else {
                auto it = remaining.upper_bound(a);
                if (it == remaining.end()) it = std::prev(remaining.end());
                b = *it;
                remaining.erase(it);
            }
        } else {
            b = pick_by_value(static_cast<std::int64_t>(rng.next(2 * n)));
        }
        pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
    return pairs;
}

}  // namespace

Family gen_random(std::int64_t n, std::uint64_t seed, std::int64_t span) {
    if (n < 1) throw std::invalid_argument("random generator requires n >= 1");
    if (span < 0) throw std::invalid_argument("random generator requires span >= 0");
    SeededRng rng(seed);
    const auto xs = sample_rank_pairs(n, rng, span);
    const auto ys = sample_rank_pairs(n, rng, span);
    std::vector<Rect> rects;
    rects.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        const auto& x = xs[static_cast<std::size_t>(i)];
        const auto& y = ys[static_cast<std::size_t>(i)];
        rects.push_back(Rect{0, x.first, y.first, x.second, y.second});
    }
    return Family(std::move(rects));
}

Family gen_clustered(std::int64_t n, std::int64_t clusters, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("clustered generator requires n >= 1");
    if (clusters < 1 || clusters > n) {
        throw std::invalid_argument(
            "clustered generator requires 1 <= clusters <= n");
    }
    SeededRng rng(seed);
    const std::int64_t base = n / clusters;
    const std::int64_t extra = n % clusters;
    const std::int64_t largest = base + (extra > 0 ? 1 : 0);
    const Coord block = 2 * largest + 4;  // per-cell coordinate block

    std::vector<Rect> rects;
    rects.reserve(static_cast<std::size_t>(n));
    for (std::int64_t c = 0; c < clusters; ++c) {
        const std::int64_t size = base + (c < extra ? 1 : 0);
        const Coord origin = c * block;
        std::vector<Coord> offsets(static_cast<std::size_t>(largest + 1));
        std::iota(offsets.begin(), offsets.end(), 0);
        std::vector<std::vector<Coord>> picks;
        for (int pass = 0; pass < 4; ++pass) {
            std::vector<Coord> shuffled = offsets;
            rng.shuffle(shuffled);
            shuffled.resize(static_cast<std::size_t>(size));
            picks.push_back(std::move(shuffled));
        }
        for (std::int64_t r = 0; r < size; ++r) {
            const auto idx = static_cast<std::size_t>(r);
            // low edges sit below the cell centre, high edges above it
            rects.push_back(Rect{0, origin + picks[0][idx],
                                 origin + picks[2][idx],
                                 origin + block - 1 - picks[1][idx],
                                 origin + block - 1 - picks[3][idx]});
        }
    }
    return Family(std::move(rects));
}

}  // namespace rectlevel
