#include <doctest.h>

#include <bit>
#include <set>

#include "rectlevel/generators.hpp"
#include "rectlevel/piercing.hpp"
#include "support.hpp"

using namespace rectlevel;
using rectlevel::test::fam;

namespace {

// independent reference: maximum independent set by subset enumeration
std::int64_t mis_exhaustive(const Family& f) {
    const std::size_t n = f.size();
    REQUIRE(n <= 20);
    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (intersects(f[i], f[j])) {
                adj[i] |= 1u << j;
                adj[j] |= 1u << i;
            }
        }
    }
    std::vector<char> independent(std::size_t{1} << n, 1);
    std::int64_t best = 0;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        const std::uint32_t low = s & (~s + 1);
        const std::uint32_t rest = s ^ low;
        const int v = std::countr_zero(low);
        independent[s] = independent[rest] && (adj[static_cast<std::size_t>(v)] & rest) == 0;
        if (independent[s]) best = std::max<std::int64_t>(best, std::popcount(s));
    }
    return best;
}

}  // namespace

TEST_CASE("greedy horizontal lines on three stacked rectangles") {
    const Family f = fam({{0, 0, 10, 2}, {1, 3, 11, 5}, {2, 6, 12, 8}});
    const PiercingStructure ps = greedy_lines(f, Orientation::horizontal);
    CHECK(ps.lines == std::vector<Coord>{2, 5, 8});
    CHECK(ps.witnesses == std::vector<RectId>{0, 1, 2});
    CHECK(ps.sentinel == 9);
    CHECK(ps.floor_of == std::vector<std::int32_t>{1, 2, 3});
    CHECK_FALSE(check_floor_property(f, ps).has_value());
}

TEST_CASE("greedy stops when no rectangle clears the last line") {
    const Family f = fam({{0, 0, 4, 3}, {2, 1, 6, 5}});
    const PiercingStructure ps = greedy_lines(f, Orientation::horizontal);
    CHECK(ps.lines == std::vector<Coord>{3});
    CHECK(ps.floor_of == std::vector<std::int32_t>{1, 1});
    CHECK(ps.sentinel == 6);
}

TEST_CASE("greedy vertical lines mirror the construction") {
    const Family f = fam({{0, 0, 6, 4}, {1, 1, 3, 9}});
    const PiercingStructure ps = greedy_lines(f, Orientation::vertical);
    CHECK(ps.lines == std::vector<Coord>{3});
    CHECK(ps.witnesses == std::vector<RectId>{1});
    CHECK(ps.floor_of == std::vector<std::int32_t>{1, 1});
}

TEST_CASE("check_floor_property flags a corrupted floor index") {
    const Family f = fam({{0, 0, 10, 2}, {1, 3, 11, 5}, {2, 6, 12, 8}});
    PiercingStructure ps = greedy_lines(f, Orientation::horizontal);
    ps.floor_of[1] = 1;  // rect 1 really lives on floor 2
    const auto violation = check_floor_property(f, ps);
    REQUIRE(violation.has_value());
    CHECK(violation->rect == 1);
    CHECK(violation->what.find("misses its floor line") != std::string::npos);
}

TEST_CASE("greedy structures hold on random families") {
    for (int trial = 0; trial < 200; ++trial) {
        const Family f = gen_random(2 + trial % 39,
                                    3000 + static_cast<std::uint64_t>(trial),
                                    trial % 2 ? 0 : 5);
        for (Orientation axis : {Orientation::horizontal, Orientation::vertical}) {
            const PiercingStructure ps = greedy_lines(f, axis);
            CHECK_FALSE(check_floor_property(f, ps).has_value());
            for (std::size_t i = 0; i + 1 < ps.lines.size(); ++i) {
                CHECK(ps.lines[i] < ps.lines[i + 1]);
            }
            for (std::size_t i = 0; i < ps.witnesses.size(); ++i) {
                for (std::size_t j = i + 1; j < ps.witnesses.size(); ++j) {
                    CHECK_FALSE(intersects(f[static_cast<std::size_t>(ps.witnesses[i])],
                                           f[static_cast<std::size_t>(ps.witnesses[j])]));
                }
            }
        }
    }
}

TEST_CASE("packing number on the worked families") {
    CHECK(packing_number_exact(gen_staircase(6)).nu == 1);
    CHECK(packing_number_exact(gen_grid(3)).nu == 3);
    CHECK(packing_number_exact(gen_tightness(32, 6)).nu == 5);
}

TEST_CASE("packing witness is a maximum disjoint subfamily") {
    const Family f = gen_tightness(32, 6);
    const PackingResult result = packing_number_exact(f);
    CHECK(static_cast<std::int64_t>(result.witness.size()) == result.nu);
    for (std::size_t i = 0; i < result.witness.size(); ++i) {
        for (std::size_t j = i + 1; j < result.witness.size(); ++j) {
            CHECK_FALSE(intersects(f[static_cast<std::size_t>(result.witness[i])],
                                   f[static_cast<std::size_t>(result.witness[j])]));
        }
    }
}

TEST_CASE("packing_number_exact refuses oversized instances") {
    const Family f = gen_random(70, 5, 0);
    CHECK_THROWS_WITH_AS(packing_number_exact(f),
                         doctest::Contains("use packing_bounds"),
                         PackingLimitError);
    const PackingBounds bounds = packing_bounds(f);
    CHECK_FALSE(bounds.exact.has_value());
    CHECK(bounds.lower >= 1);
}

TEST_CASE("packing_bounds on small fixtures") {
    const PackingBounds stacked =
        packing_bounds(fam({{0, 0, 10, 2}, {1, 3, 11, 5}, {2, 6, 12, 8}}));
    CHECK(stacked.lower == 3);
    REQUIRE(stacked.exact.has_value());
    CHECK(stacked.exact->nu == 3);

    const PackingBounds staircase = packing_bounds(gen_staircase(5));
    CHECK(staircase.lower == 1);
    REQUIRE(staircase.exact.has_value());
    CHECK(staircase.exact->nu == 1);
}

TEST_CASE("greedy lower bound never exceeds the exact packing number") {
    for (int trial = 0; trial < 200; ++trial) {
        const Family f = gen_random(2 + trial % 39,
                                    8800 + static_cast<std::uint64_t>(trial),
                                    trial % 3 == 0 ? 0 : 7);
        const PackingBounds bounds = packing_bounds(f);
        REQUIRE(bounds.exact.has_value());
        CHECK(bounds.lower <= bounds.exact->nu);
    }
}

TEST_CASE("packing number survives rank-respecting re-embedding") {
    for (int trial = 0; trial < 40; ++trial) {
        const Family f = gen_random(3 + trial % 30,
                                    410 + static_cast<std::uint64_t>(trial), 0);
        const Family re = perturb_to_general_position(f);
        CHECK(packing_number_exact(re).nu == packing_number_exact(f).nu);
    }
}

TEST_CASE("branch and bound matches subset enumeration") {
    for (int trial = 0; trial < 60; ++trial) {
        const Family f = gen_random(2 + trial % 13,
                                    650 + static_cast<std::uint64_t>(trial),
                                    trial % 2 ? 0 : 4);
        CHECK(packing_number_exact(f).nu == mis_exhaustive(f));
    }
}
