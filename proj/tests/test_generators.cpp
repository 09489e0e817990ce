#include <doctest.h>

#include "rectlevel/arrangement.hpp"
#include "rectlevel/classification.hpp"
#include "rectlevel/generators.hpp"
#include "rectlevel/piercing.hpp"
#include "support.hpp"

using namespace rectlevel;

TEST_CASE("gen_grid") {
    SUBCASE("m=1 is a single four-vertex crossing") {
        const Family f = gen_grid(1);
        CHECK(f.size() == 2);
        const ArrangementProfile prof = enumerate_vertices_oracle(f);
        CHECK(prof.vertex_count() == 4);
        CHECK(prof.union_complexity == 4);
        CHECK(prof.depth_histogram == std::vector<std::int64_t>{4});
    }
    SUBCASE("union complexity is exactly 4m^2 and nu is m") {
        for (std::int64_t m : {1, 2, 3, 5}) {
            const Family f = gen_grid(m);
            CHECK(f.size() == static_cast<std::size_t>(2 * m));
            CHECK(validate_general_position(f).ok());
            const ArrangementProfile prof = analyze_sweep(f);
            CHECK(prof.union_complexity == 4 * m * m);
            CHECK(prof.vertex_count() == 4 * m * m);
            CHECK(packing_number_exact(f).nu == m);
        }
    }
    SUBCASE("m=0 is rejected") {
        CHECK_THROWS_AS(gen_grid(0), std::invalid_argument);
    }
}

TEST_CASE("gen_staircase") {
    SUBCASE("one rectangle has no vertices") {
        const Family f = gen_staircase(1);
        CHECK(enumerate_vertices_oracle(f).vertices.empty());
    }
    SUBCASE("two rectangles cross in four depth-0 vertices") {
        const Family f = gen_staircase(2);
        CHECK(intersects(f[0], f[1]));
        CHECK(packing_number_exact(f).nu == 1);
        const ArrangementProfile prof = enumerate_vertices_oracle(f);
        CHECK(prof.vertex_count() == 4);
        CHECK(prof.union_complexity == 4);
    }
    SUBCASE("successive rectangles get wider and shorter") {
        const Family f = gen_staircase(6);
        for (std::size_t i = 0; i + 1 < f.size(); ++i) {
            CHECK(f[i].width() < f[i + 1].width());
            CHECK(f[i].height() > f[i + 1].height());
            CHECK(intersects(f[i], f[i + 1]));
        }
        CHECK(validate_general_position(f).ok());
    }
    SUBCASE("level complexity grows linearly in m at fixed k") {
        const std::int64_t at16 = analyze_sweep(gen_staircase(16)).level_complexity(2);
        const std::int64_t at32 = analyze_sweep(gen_staircase(32)).level_complexity(2);
        CHECK(at16 == 168);
        CHECK(at32 == 360);
        // ratio within 10% of 2: 10*at32 between 18*at16 and 22*at16
        CHECK(10 * at32 >= 18 * at16);
        CHECK(10 * at32 <= 22 * at16);
    }
}

TEST_CASE("gen_tightness") {
    SUBCASE("32 rects at p=6 split evenly and have packing number 5") {
        const Family f = gen_tightness(32, 6);
        CHECK(f.size() == 32);
        CHECK(validate_general_position(f).ok());
        CHECK(packing_number_exact(f).nu == 5);
    }
    SUBCASE("S entries stay within the k=1 capacity") {
        const Family f = gen_tightness(32, 6);
        const ArrangementProfile prof = analyze_sweep(f);
        const auto horizontal = greedy_lines(f, Orientation::horizontal);
        const auto vertical = greedy_lines(f, Orientation::vertical);
        auto records =
            assign_contributions(f, vertical, horizontal, extract_type_L(prof, 1));
        classify_inner_extremal(records);
        const SMatrix s = tabulate_S(records, 1, horizontal.line_count(),
                                     vertical.line_count());
        CHECK(s.max_entry() <= 3);
    }
    SUBCASE("divisibility violations name the constraint") {
        CHECK_THROWS_WITH_AS(gen_tightness(30, 6), "4(p-2)=16 must divide n",
                             std::invalid_argument);
        CHECK_THROWS_AS(gen_tightness(8, 6), std::invalid_argument);
        CHECK_THROWS_AS(gen_tightness(16, 2), std::invalid_argument);
    }
    SUBCASE("smallest legal instance per p") {
        for (std::int64_t p : {3, 4, 6}) {
            const std::int64_t n = 4 * (p - 2);
            const Family f = gen_tightness(n, p);
            CHECK(f.size() == static_cast<std::size_t>(n));
            CHECK(validate_general_position(f).ok());
            CHECK(packing_number_exact(f).nu == p - 1);
        }
    }
}

TEST_CASE("gen_random") {
    SUBCASE("deterministic per (n, seed, span)") {
        CHECK(gen_random(25, 9, 0) == gen_random(25, 9, 0));
        CHECK(gen_random(25, 9, 5) == gen_random(25, 9, 5));
        CHECK_FALSE(gen_random(25, 9, 0) == gen_random(25, 10, 0));
    }
    SUBCASE("n=1 yields a single rect with an empty profile") {
        const Family f = gen_random(1, 4, 0);
        CHECK(f.size() == 1);
        CHECK(analyze_sweep(f).vertex_count() == 0);
    }
    SUBCASE("always valid across parameters") {
        for (int trial = 0; trial < 120; ++trial) {
            const Family f = gen_random(1 + trial % 50,
                                        500 + static_cast<std::uint64_t>(trial),
                                        trial % 4 == 0 ? 0 : trial % 11);
            CHECK(validate_general_position(f).ok());
        }
    }
    SUBCASE("span keeps rank widths small") {
        const Family f = gen_random(200, 3, 4);
        std::int64_t wide = 0;
        for (const Rect& r : f) {
            if (r.width() > 4) ++wide;
        }
        // nearest-available fallbacks stay a small minority
        CHECK(wide * 5 <= static_cast<std::int64_t>(f.size()));
    }
}

TEST_CASE("gen_clustered") {
    SUBCASE("packing number equals the cluster count") {
        CHECK(packing_number_exact(gen_clustered(24, 4, 11)).nu == 4);
        CHECK(packing_number_exact(gen_clustered(12, 1, 11)).nu == 1);
    }
    SUBCASE("one rect per cluster is pairwise disjoint") {
        const Family f = gen_clustered(12, 12, 7);
        CHECK(packing_number_exact(f).nu == 12);
        CHECK(analyze_sweep(f).vertex_count() == 0);
    }
    SUBCASE("validates and is deterministic") {
        for (int trial = 0; trial < 60; ++trial) {
            const std::int64_t n = 1 + trial % 30;
            const std::int64_t clusters = 1 + trial % n;
            const Family f =
                gen_clustered(n, clusters, static_cast<std::uint64_t>(trial));
            CHECK(validate_general_position(f).ok());
            CHECK(f == gen_clustered(n, clusters, static_cast<std::uint64_t>(trial)));
        }
    }
    SUBCASE("bad parameters are rejected") {
        CHECK_THROWS_AS(gen_clustered(4, 5, 0), std::invalid_argument);
        CHECK_THROWS_AS(gen_clustered(4, 0, 0), std::invalid_argument);
    }
}
