#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rectlevel/arrangement.hpp"
#include "rectlevel/classification.hpp"
#include "rectlevel/geometry.hpp"
#include "rectlevel/piercing.hpp"

namespace rectlevel {

// 8(k+1)n + 2*max(0, (p-1)(p-3))*(k+1)(k+2); the negative product at p <= 3
// is clamped since the bounded quantity is a cardinality.
std::int64_t exact_bound_leq_k(std::int64_t n, std::int64_t p, int k);

// 2(k+1)n + max(0, (p-1)(p-3))*(k+1)(k+2)/2, integer exact.
std::int64_t exact_bound_X(std::int64_t n, std::int64_t p, int k);

struct BoundCheck {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
};

struct BoundReport {
    std::int64_t n = 0;
    int k = 0;
    std::optional<std::int64_t> nu;  // empty when unknown
    std::string nu_source;           // "exact" | "provided" | "unknown"
    std::int64_t q_h = 0;
    std::int64_t q_v = 0;
    std::int64_t measured_leq_k = 0;
    std::array<std::int64_t, 4> x_leq_k_per_type{};  // indexed by VertexKind
    std::int64_t inner_total = 0;
    std::int64_t extremal_total = 0;
    std::int64_t same_line_witness_inner = 0;  // diagnostic, expected 0
    std::map<std::string, std::int64_t> bound_values;
    std::vector<BoundCheck> checks;

    bool all_passed() const;
    const BoundCheck* find(const std::string& name) const;
};

// One reflection's full pipeline: arrangement, both greedy structures and
// the classified type (top,right) records of the reflected family.
struct ReflectionAnalysis {
    VertexKind kind = VertexKind::top_right;
    ArrangementProfile profile;
    PiercingStructure horizontal;
    PiercingStructure vertical;
    std::vector<ContributionRecord> records;  // classified, depth <= k
    SMatrix s;
};

// Family realizing the given kind as top_right: identity for top_right,
// otherwise the matching reflection.
Family family_for_kind(const Family& f, VertexKind kind);

ReflectionAnalysis analyze_reflection(const Family& f, VertexKind kind, int k);

struct VerifyOptions {
    // Analytic packing number for instances above the exact limit.
    std::optional<std::int64_t> known_nu;
    int exact_packing_limit = kDefaultExactPackingLimit;
};

// Runs the full pipeline on the family and its three reflections and
// evaluates every inequality check at threshold k.
BoundReport verify(const Family& f, int k, const VerifyOptions& opts = {});

}  // namespace rectlevel
