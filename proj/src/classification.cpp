#include "rectlevel/classification.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace rectlevel {

std::vector<Vertex> extract_type_L(const ArrangementProfile& prof, int k) {
    if (k < 0) throw std::invalid_argument("extract_type_L requires k >= 0");
    std::vector<Vertex> out;
    for (const Vertex& v : prof.vertices) {
        if (v.kind() == VertexKind::top_right && v.depth <= k) out.push_back(v);
    }
    return out;
}

std::vector<ContributionRecord> assign_contributions(
    const Family& f, const PiercingStructure& vertical,
    const PiercingStructure& horizontal, const std::vector<Vertex>& type_L) {
    if (vertical.axis != Orientation::vertical ||
        horizontal.axis != Orientation::horizontal) {
        throw std::logic_error("assign_contributions: structures passed with swapped axes");
    }
    std::vector<ContributionRecord> records;
    records.reserve(type_L.size());
    for (const Vertex& v : type_L) {
        ContributionRecord rec;
        rec.vertex = v;
        rec.a_id = v.h_owner;
        rec.b_id = v.v_owner;
        const Rect& b = f[static_cast<std::size_t>(v.v_owner)];
        // rightmost line meeting b, closed on both sides
        const auto it = std::upper_bound(vertical.lines.begin(), vertical.lines.end(),
                                         b.x_max);
        if (it == vertical.lines.begin() || *(it - 1) < b.x_min) {
            std::ostringstream msg;
            msg << "rect " << b.id
                << " meets no vertical line; piercing property violated";
            throw std::logic_error(msg.str());
        }
        rec.line_index = static_cast<std::int32_t>(it - vertical.lines.begin());
        rec.floor_of_a = horizontal.floor_of[static_cast<std::size_t>(v.h_owner)];
        records.push_back(rec);
    }
    return records;
}

namespace {

// Record indices grouped by a_id, each group ordered by increasing x along
// the shared top edge.
std::map<RectId, std::vector<std::size_t>> group_by_a(
    const std::vector<ContributionRecord>& records) {
    std::map<RectId, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < records.size(); ++i) {
        groups[records[i].a_id].push_back(i);
    }
    for (auto& [a, idx] : groups) {
        std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
            return records[i].vertex.x < records[j].vertex.x;
        });
    }
    return groups;
}

}  // namespace

void classify_inner_extremal(std::vector<ContributionRecord>& records) {
    const auto groups = group_by_a(records);
    for (const auto& [a, idx] : groups) {
        for (std::size_t pos = 0; pos < idx.size(); ++pos) {
            const std::int32_t line = records[idx[pos]].line_index;
            bool left_other = false;
            for (std::size_t i = 0; i < pos && !left_other; ++i) {
                left_other = records[idx[i]].line_index != line;
            }
            bool right_other = false;
            for (std::size_t i = pos + 1; i < idx.size() && !right_other; ++i) {
                right_other = records[idx[i]].line_index != line;
            }
            records[idx[pos]].kind = left_other && right_other
                                         ? ContributionRecord::Kind::inner
                                         : ContributionRecord::Kind::extremal;
        }
    }
}

std::int64_t SMatrix::max_entry() const {
    std::int64_t best = 0;
    for (const auto& [key, count] : entries) best = std::max(best, count);
    return best;
}

std::int64_t SMatrix::total() const {
    std::int64_t sum = 0;
    for (const auto& [key, count] : entries) sum += count;
    return sum;
}

SMatrix tabulate_S(const std::vector<ContributionRecord>& records, int k,
                   std::int64_t floors, std::int64_t lines) {
    SMatrix s;
    s.k = k;
    s.floors = floors;
    s.lines = lines;
    for (const ContributionRecord& rec : records) {
        if (rec.kind == ContributionRecord::Kind::unset) {
            throw std::logic_error("tabulate_S: records not classified");
        }
        if (rec.kind != ContributionRecord::Kind::inner) continue;
        s.entries[{rec.floor_of_a, rec.line_index}] += 1;
    }
    return s;
}

namespace {

std::string describe_record(const ContributionRecord& rec) {
    std::ostringstream msg;
    msg << "(" << rec.vertex.x << "," << rec.vertex.y << ") a=" << rec.a_id
        << " b=" << rec.b_id << " line=" << rec.line_index
        << " depth=" << rec.vertex.depth;
    return msg.str();
}

}  // namespace

std::optional<RecordCheckViolation> check_depth_uniqueness(
    const std::vector<ContributionRecord>& records) {
    std::map<std::tuple<RectId, std::int32_t, std::int32_t>, std::size_t> seen;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const ContributionRecord& rec = records[i];
        const auto key = std::make_tuple(rec.a_id, rec.line_index, rec.vertex.depth);
        const auto [it, inserted] = seen.emplace(key, i);
        if (!inserted) {
            std::ostringstream msg;
            msg << "two records share (a, line, depth): "
                << describe_record(records[it->second]) << " and "
                << describe_record(rec);
            return RecordCheckViolation{msg.str()};
        }
    }
    return std::nullopt;
}

std::optional<RecordCheckViolation> check_inner_flanking_lines(
    const Family& f, const PiercingStructure& vertical,
    const std::vector<ContributionRecord>& records) {
    const std::int64_t q = vertical.line_count();
    for (const ContributionRecord& rec : records) {
        if (rec.kind != ContributionRecord::Kind::inner) continue;
        const Rect& a = f[static_cast<std::size_t>(rec.a_id)];
        if (rec.line_index + 1 > q) {
            std::ostringstream msg;
            msg << "inner record " << describe_record(rec)
                << " sits on the last line " << rec.line_index;
            return RecordCheckViolation{msg.str()};
        }
        const Coord left_line =
            vertical.lines[static_cast<std::size_t>(rec.line_index - 1)];
        const Coord right_line =
            vertical.lines[static_cast<std::size_t>(rec.line_index)];
        if (!(a.x_min <= left_line && left_line <= a.x_max) ||
            !(a.x_min <= right_line && right_line <= a.x_max)) {
            std::ostringstream msg;
            msg << "inner record " << describe_record(rec) << " has a=["
                << a.x_min << "," << a.x_max << "] missing line "
                << rec.line_index << " at " << left_line << " or line "
                << rec.line_index + 1 << " at " << right_line;
            return RecordCheckViolation{msg.str()};
        }
    }
    return std::nullopt;
}

std::optional<RecordCheckViolation> check_depth_chain(
    const std::vector<ContributionRecord>& records) {
    std::map<std::pair<RectId, std::int32_t>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < records.size(); ++i) {
        groups[{records[i].a_id, records[i].line_index}].push_back(i);
    }
    for (auto& [key, idx] : groups) {
        std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
            return records[i].vertex.x > records[j].vertex.x;
        });
        for (std::size_t m = 0; m < idx.size(); ++m) {
            if (records[idx[m]].vertex.depth < static_cast<std::int32_t>(m)) {
                std::ostringstream msg;
                msg << "record " << describe_record(records[idx[m]])
                    << " is the rank-" << m
                    << " record of its (a, line) pair in decreasing x but has depth "
                    << records[idx[m]].vertex.depth;
                return RecordCheckViolation{msg.str()};
            }
        }
    }
    return std::nullopt;
}

std::int64_t count_same_line_witness_inner(
    const std::vector<ContributionRecord>& records) {
    std::int64_t count = 0;
    const auto groups = group_by_a(records);
    for (const auto& [a, idx] : groups) {
        for (std::size_t pos = 0; pos < idx.size(); ++pos) {
            const ContributionRecord& rec = records[idx[pos]];
            if (rec.kind != ContributionRecord::Kind::inner) continue;
            std::set<std::int32_t> left;
            for (std::size_t i = 0; i < pos; ++i) {
                const std::int32_t line = records[idx[i]].line_index;
                if (line != rec.line_index) left.insert(line);
            }
            bool found = false;
            for (std::size_t i = pos + 1; i < idx.size() && !found; ++i) {
                const std::int32_t line = records[idx[i]].line_index;
                found = line != rec.line_index && left.count(line) > 0;
            }
            if (found) ++count;
        }
    }
    return count;
}

}  // namespace rectlevel
