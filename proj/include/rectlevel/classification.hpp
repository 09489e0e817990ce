#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rectlevel/arrangement.hpp"
#include "rectlevel/geometry.hpp"
#include "rectlevel/piercing.hpp"

namespace rectlevel {

// A type (top,right) crossing with its supporting structure resolved:
// a_id owns the top edge, b_id the right edge, line_index is the rightmost
// vertical line meeting b (closed, 1-based) and floor_of_a the horizontal
// floor of a.
struct ContributionRecord {
    enum class Kind : std::uint8_t { unset, inner, extremal };

    Vertex vertex;
    RectId a_id = 0;
    RectId b_id = 0;
    std::int32_t line_index = 0;
    std::int32_t floor_of_a = 0;
    Kind kind = Kind::unset;

    bool operator==(const ContributionRecord&) const = default;
};

// Vertices of kind top_right with depth <= k, in profile order.
std::vector<Vertex> extract_type_L(const ArrangementProfile& prof, int k);

// Resolves line_index and floor_of_a for each type (top,right) vertex.
// Throws std::logic_error when some b is met by no vertical line, which
// would contradict the piercing property.
std::vector<ContributionRecord> assign_contributions(
    const Family& f, const PiercingStructure& vertical,
    const PiercingStructure& horizontal, const std::vector<Vertex>& type_L);

// Literal quantifier: a record is inner when records with a different line
// exist strictly on both of its sides along the same top edge; otherwise
// extremal.
void classify_inner_extremal(std::vector<ContributionRecord>& records);

struct SMatrix {
    int k = 0;
    std::int64_t floors = 0;
    std::int64_t lines = 0;
    // (floor of a, line index) -> number of inner records
    std::map<std::pair<std::int32_t, std::int32_t>, std::int64_t> entries;

    std::int64_t max_entry() const;
    std::int64_t total() const;
};

SMatrix tabulate_S(const std::vector<ContributionRecord>& records, int k,
                   std::int64_t floors, std::int64_t lines);

struct RecordCheckViolation {
    std::string what;
};

// At most one record per (a, line, depth). Stated by the source material
// but falsifiable on valid input; see check_depth_chain for the always-true
// replacement that the bounds rely on.
std::optional<RecordCheckViolation> check_depth_uniqueness(
    const std::vector<ContributionRecord>& records);

// Every inner record on line i requires a to meet lines i and i+1 (closed).
std::optional<RecordCheckViolation> check_inner_flanking_lines(
    const Family& f, const PiercingStructure& vertical,
    const std::vector<ContributionRecord>& records);

// Per (a, line), the m-th record in decreasing x (0-based) has depth >= m:
// it lies interior to the b of every record to its right.
std::optional<RecordCheckViolation> check_depth_chain(
    const std::vector<ContributionRecord>& records);

// Diagnostic: inner records admitting a witness pair on one shared line.
// The slot ordering argument makes this impossible; reported, not asserted.
std::int64_t count_same_line_witness_inner(
    const std::vector<ContributionRecord>& records);

}  // namespace rectlevel
