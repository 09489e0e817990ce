#include <doctest.h>

#include <set>

#include "rectlevel/classification.hpp"
#include "rectlevel/generators.hpp"
#include "support.hpp"

using namespace rectlevel;
using rectlevel::test::fam;

namespace {

struct Pipeline {
    Family family;
    ArrangementProfile profile;
    PiercingStructure horizontal;
    PiercingStructure vertical;
    std::vector<ContributionRecord> records;

    explicit Pipeline(Family f, int k)
        : family(std::move(f)),
          profile(enumerate_vertices_oracle(family)),
          horizontal(greedy_lines(family, Orientation::horizontal)),
          vertical(greedy_lines(family, Orientation::vertical)) {
        records = assign_contributions(family, vertical, horizontal,
                                       extract_type_L(profile, k));
        classify_inner_extremal(records);
    }
};

// independent re-evaluation of the inner quantifier over the flat list
bool inner_expected(const std::vector<ContributionRecord>& records,
                    const ContributionRecord& r) {
    bool left = false;
    bool right = false;
    for (const ContributionRecord& o : records) {
        if (o.a_id != r.a_id || o.line_index == r.line_index) continue;
        left = left || o.vertex.x < r.vertex.x;
        right = right || o.vertex.x > r.vertex.x;
    }
    return left && right;
}

}  // namespace

TEST_CASE("extract_type_L keeps only (top,right) vertices within depth k") {
    SUBCASE("corner pair yields one record") {
        const Family f = fam({{0, 0, 6, 4}, {1, 1, 3, 9}});
        const auto type_l = extract_type_L(enumerate_vertices_oracle(f), 0);
        REQUIRE(type_l.size() == 1);
        CHECK(type_l[0].x == 3);
        CHECK(type_l[0].y == 4);
        CHECK(type_l[0].h_owner == 0);
        CHECK(type_l[0].v_owner == 1);
    }
    SUBCASE("mirror-type pair yields none") {
        const Family f = fam({{0, 0, 4, 3}, {2, 1, 6, 5}});
        CHECK(extract_type_L(enumerate_vertices_oracle(f), 0).empty());
    }
    SUBCASE("single rectangle yields none") {
        CHECK(extract_type_L(enumerate_vertices_oracle(fam({{0, 0, 2, 2}})), 0)
                  .empty());
    }
}

TEST_CASE("assign_contributions resolves the rightmost meeting line") {
    SUBCASE("single line through b's right edge") {
        const Pipeline pipe(fam({{0, 0, 6, 4}, {1, 1, 3, 9}}), 0);
        REQUIRE(pipe.records.size() == 1);
        CHECK(pipe.records[0].a_id == 0);
        CHECK(pipe.records[0].b_id == 1);
        CHECK(pipe.records[0].line_index == 1);
        CHECK(pipe.records[0].floor_of_a == 1);
    }
    SUBCASE("rightmost wins when several lines meet b") {
        // hand-built structure with lines at 3 and 7; b spans x in [2,8]
        const Family f = fam({{0, 0, 10, 6}, {2, 1, 8, 9}});
        PiercingStructure vertical;
        vertical.axis = Orientation::vertical;
        vertical.lines = {3, 7};
        vertical.witnesses = {0, 1};
        vertical.sentinel = 11;
        vertical.floor_of = {2, 2};
        const PiercingStructure horizontal = greedy_lines(f, Orientation::horizontal);
        const auto type_l = extract_type_L(enumerate_vertices_oracle(f), 0);
        REQUIRE(type_l.size() == 1);  // (8,6)
        const auto records = assign_contributions(f, vertical, horizontal, type_l);
        REQUIRE(records.size() == 1);
        CHECK(records[0].line_index == 2);
    }
    SUBCASE("a need not meet the contributing line") {
        // b reaches back to a line far left of a
        const Family f =
            fam({{0, 0, 6, 4}, {-10, 1, 5, 9}, {-9, 20, -8, 21}});
        const Pipeline pipe(f, 0);
        CHECK(pipe.vertical.lines == std::vector<Coord>{-8, 6});
        REQUIRE(pipe.records.size() == 1);
        CHECK(pipe.records[0].vertex.x == 5);
        CHECK(pipe.records[0].line_index == 1);
        const Rect& a = f[0];
        const Coord line = pipe.vertical.lines[0];
        CHECK((line < a.x_min || line > a.x_max));  // disjoint from a
    }
    SUBCASE("swapped structures are rejected") {
        const Family f = fam({{0, 0, 6, 4}, {1, 1, 3, 9}});
        const auto h = greedy_lines(f, Orientation::horizontal);
        const auto v = greedy_lines(f, Orientation::vertical);
        CHECK_THROWS_AS(assign_contributions(f, h, v, {}), std::logic_error);
    }
}

TEST_CASE("inner/extremal classification") {
    SUBCASE("a single record is extremal") {
        const Pipeline pipe(fam({{0, 0, 6, 4}, {1, 1, 3, 9}}), 0);
        REQUIRE(pipe.records.size() == 1);
        CHECK(pipe.records[0].kind == ContributionRecord::Kind::extremal);
    }
    SUBCASE("one shared line keeps everything extremal") {
        const Pipeline pipe(gen_staircase(8), 5);
        CHECK(pipe.vertical.line_count() == 1);
        for (const ContributionRecord& rec : pipe.records) {
            CHECK(rec.kind == ContributionRecord::Kind::extremal);
        }
    }
    SUBCASE("nested grid crossings create inner records") {
        const Pipeline pipe(gen_tightness(32, 6), 1);
        std::int64_t inner = 0;
        for (const ContributionRecord& rec : pipe.records) {
            if (rec.kind == ContributionRecord::Kind::inner) ++inner;
            CHECK((rec.kind == ContributionRecord::Kind::inner) ==
                  inner_expected(pipe.records, rec));
        }
        CHECK(inner > 0);
    }
    SUBCASE("classification matches the quantifier on random families") {
        for (int trial = 0; trial < 80; ++trial) {
            const Pipeline pipe(
                gen_random(4 + trial % 30, 2200 + static_cast<std::uint64_t>(trial),
                           trial % 2 ? 0 : 6),
                trial % 6);
            for (const ContributionRecord& rec : pipe.records) {
                CHECK((rec.kind == ContributionRecord::Kind::inner) ==
                      inner_expected(pipe.records, rec));
            }
        }
    }
}

TEST_CASE("tabulate_S") {
    SUBCASE("single vertical line means an all-zero matrix") {
        const Pipeline pipe(gen_staircase(8), 3);
        const SMatrix s = tabulate_S(pipe.records, 3, pipe.horizontal.line_count(),
                                     pipe.vertical.line_count());
        CHECK(s.entries.empty());
        CHECK(s.max_entry() == 0);
    }
    SUBCASE("nested grid entries stay within the capacity") {
        const Pipeline pipe(gen_tightness(32, 6), 1);
        const SMatrix s = tabulate_S(pipe.records, 1, pipe.horizontal.line_count(),
                                     pipe.vertical.line_count());
        CHECK(s.max_entry() <= 3);  // (k+1)(k+2)/2 at k=1
        std::int64_t inner = 0;
        for (const ContributionRecord& rec : pipe.records) {
            if (rec.kind == ContributionRecord::Kind::inner) ++inner;
        }
        CHECK(s.total() == inner);
        for (const auto& [key, count] : s.entries) {
            CHECK(key.first >= 1);
            CHECK(key.first <= pipe.horizontal.line_count());
            CHECK(key.second >= 1);
            CHECK(key.second <= pipe.vertical.line_count());
        }
    }
    SUBCASE("unclassified records are rejected") {
        const Family f = fam({{0, 0, 6, 4}, {1, 1, 3, 9}});
        const auto prof = enumerate_vertices_oracle(f);
        auto records = assign_contributions(
            f, greedy_lines(f, Orientation::vertical),
            greedy_lines(f, Orientation::horizontal), extract_type_L(prof, 0));
        CHECK_THROWS_AS(tabulate_S(records, 0, 1, 1), std::logic_error);
    }
}

TEST_CASE("record slot invariant: x in [line, next line)") {
    for (int trial = 0; trial < 80; ++trial) {
        const Pipeline pipe(gen_random(4 + trial % 30,
                                       5100 + static_cast<std::uint64_t>(trial),
                                       trial % 2 ? 0 : 8),
                            5);
        for (const ContributionRecord& rec : pipe.records) {
            const auto& lines = pipe.vertical.lines;
            const std::size_t i = static_cast<std::size_t>(rec.line_index - 1);
            CHECK(rec.vertex.x >= lines[i]);
            if (i + 1 < lines.size()) CHECK(rec.vertex.x < lines[i + 1]);
        }
    }
}

TEST_CASE("depth uniqueness check") {
    SUBCASE("holds on the structured generators") {
        for (int k : {0, 2, 5}) {
            CHECK_FALSE(check_depth_uniqueness(Pipeline(gen_grid(4), k).records));
            CHECK_FALSE(check_depth_uniqueness(Pipeline(gen_staircase(9), k).records));
            CHECK_FALSE(
                check_depth_uniqueness(Pipeline(gen_tightness(32, 6), k).records));
            CHECK_FALSE(
                check_depth_uniqueness(Pipeline(gen_clustered(18, 3, 4), k).records));
        }
    }
    SUBCASE("empty record set is fine") {
        CHECK_FALSE(check_depth_uniqueness({}));
    }
    SUBCASE("a duplicated synthetic record is reported") {
        Pipeline pipe(fam({{0, 0, 6, 4}, {1, 1, 3, 9}}), 0);
        auto records = pipe.records;
        records.push_back(records[0]);
        const auto violation = check_depth_uniqueness(records);
        REQUIRE(violation.has_value());
        CHECK(violation->what.find("share (a, line, depth)") != std::string::npos);
    }
    SUBCASE("fails on the known depth-tie family, whose chain rank still holds") {
        const Pipeline pipe(rectlevel::test::depth_tie_family(), 1);
        CHECK(check_depth_uniqueness(pipe.records).has_value());
        CHECK_FALSE(check_depth_chain(pipe.records).has_value());
    }
}

TEST_CASE("inner flanking line check") {
    SUBCASE("holds on the generators") {
        for (const Pipeline& pipe :
             {Pipeline(gen_tightness(32, 6), 2), Pipeline(gen_grid(5), 1),
              Pipeline(gen_clustered(20, 4, 9), 3)}) {
            CHECK_FALSE(
                check_inner_flanking_lines(pipe.family, pipe.vertical, pipe.records)
                    .has_value());
        }
    }
    SUBCASE("vacuous when everything is extremal") {
        const Pipeline pipe(gen_staircase(7), 4);
        CHECK_FALSE(
            check_inner_flanking_lines(pipe.family, pipe.vertical, pipe.records)
                .has_value());
    }
    SUBCASE("an inner record on the last line is reported") {
        Pipeline pipe(fam({{0, 0, 6, 4}, {1, 1, 3, 9}}), 0);
        auto records = pipe.records;
        REQUIRE(records.size() == 1);
        records[0].kind = ContributionRecord::Kind::inner;
        const auto violation =
            check_inner_flanking_lines(pipe.family, pipe.vertical, records);
        REQUIRE(violation.has_value());
        CHECK(violation->what.find("last line") != std::string::npos);
    }
    SUBCASE("an inner record whose a misses the next line is reported") {
        const Family f = fam({{0, 0, 6, 4}, {1, 1, 3, 9}});
        PiercingStructure vertical;
        vertical.axis = Orientation::vertical;
        vertical.lines = {3, 100};
        vertical.witnesses = {1, 0};
        vertical.sentinel = 101;
        vertical.floor_of = {2, 1};
        const auto horizontal = greedy_lines(f, Orientation::horizontal);
        auto records = assign_contributions(
            f, vertical, horizontal,
            extract_type_L(enumerate_vertices_oracle(f), 0));
        REQUIRE(records.size() == 1);
        records[0].kind = ContributionRecord::Kind::inner;
        const auto violation = check_inner_flanking_lines(f, vertical, records);
        REQUIRE(violation.has_value());
        CHECK(violation->what.find("missing line") != std::string::npos);
    }
}

TEST_CASE("depth chain rank holds everywhere") {
    for (int trial = 0; trial < 120; ++trial) {
        const Pipeline pipe(gen_random(4 + trial % 40,
                                       6400 + static_cast<std::uint64_t>(trial),
                                       trial % 3 == 0 ? 0 : 5),
                            trial % 6);
        CHECK_FALSE(check_depth_chain(pipe.records).has_value());
    }
    CHECK_FALSE(check_depth_chain(Pipeline(gen_tightness(64, 6), 5).records));
}

TEST_CASE("same-line witness diagnostic") {
    SUBCASE("zero on the generators") {
        CHECK(count_same_line_witness_inner(Pipeline(gen_tightness(32, 6), 2).records) ==
              0);
        CHECK(count_same_line_witness_inner(Pipeline(gen_grid(4), 1).records) == 0);
    }
    SUBCASE("counts a synthetic same-line sandwich") {
        // three records of one a: lines 2, 1, 2 in x order
        std::vector<ContributionRecord> records(3);
        for (int i = 0; i < 3; ++i) {
            records[static_cast<std::size_t>(i)].vertex.x = 10 * (i + 1);
            records[static_cast<std::size_t>(i)].a_id = 7;
            records[static_cast<std::size_t>(i)].b_id = static_cast<RectId>(i);
            records[static_cast<std::size_t>(i)].kind =
                ContributionRecord::Kind::inner;
        }
        records[0].line_index = 2;
        records[1].line_index = 1;
        records[2].line_index = 2;
        CHECK(count_same_line_witness_inner(records) == 1);
    }
}

TEST_CASE("extremal records of one rectangle sit on at most two lines") {
    for (int trial = 0; trial < 80; ++trial) {
        const Pipeline pipe(gen_random(4 + trial % 36,
                                       9700 + static_cast<std::uint64_t>(trial),
                                       trial % 2 ? 0 : 9),
                            trial % 6);
        std::map<RectId, std::set<std::int32_t>> lines_per_a;
        std::int64_t inner = 0;
        std::int64_t extremal = 0;
        for (const ContributionRecord& rec : pipe.records) {
            if (rec.kind == ContributionRecord::Kind::extremal) {
                lines_per_a[rec.a_id].insert(rec.line_index);
                ++extremal;
            } else {
                ++inner;
            }
        }
        for (const auto& [a, lines] : lines_per_a) {
            CHECK(lines.size() <= 2);
        }
        CHECK(inner + extremal == static_cast<std::int64_t>(pipe.records.size()));
    }
}
