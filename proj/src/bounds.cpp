#include "rectlevel/bounds.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rectlevel {

namespace {

std::int64_t clamped_pair_product(std::int64_t p) {
    return std::max<std::int64_t>(0, (p - 1) * (p - 3));
}

// generous caps under which every bound term fits in int64
void require_exact_range(std::int64_t n, std::int64_t p, int k) {
    if (n > (std::int64_t{1} << 40) || p > (std::int64_t{1} << 20) || k > (1 << 12)) {
        throw std::invalid_argument("bound parameters exceed the exact range");
    }
}

// (k+1)(k+2)/2, the per-(floor, line) inner capacity.
std::int64_t inner_capacity(int k) {
    const std::int64_t kk = k;
    return (kk + 1) * (kk + 2) / 2;
}

}  // namespace

std::int64_t exact_bound_leq_k(std::int64_t n, std::int64_t p, int k) {
    if (n < 1 || p < 1 || k < 0) {
        throw std::invalid_argument("exact_bound_leq_k requires n >= 1, p >= 1, k >= 0");
    }
    require_exact_range(n, p, k);
    const std::int64_t kk = k;
    return 8 * (kk + 1) * n + 2 * clamped_pair_product(p) * (kk + 1) * (kk + 2);
}

std::int64_t exact_bound_X(std::int64_t n, std::int64_t p, int k) {
    if (n < 1 || p < 1 || k < 0) {
        throw std::invalid_argument("exact_bound_X requires n >= 1, p >= 1, k >= 0");
    }
    require_exact_range(n, p, k);
    const std::int64_t kk = k;
    return 2 * (kk + 1) * n + clamped_pair_product(p) * ((kk + 1) * (kk + 2) / 2);
}

bool BoundReport::all_passed() const {
    for (const BoundCheck& c : checks) {
        if (!c.skipped && !c.pass) return false;
    }
    return true;
}

const BoundCheck* BoundReport::find(const std::string& name) const {
    for (const BoundCheck& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

Family family_for_kind(const Family& f, VertexKind kind) {
    switch (kind) {
        case VertexKind::top_right: return f;
        case VertexKind::top_left: return reflect(f, Axis::vertical);
        case VertexKind::bottom_right: return reflect(f, Axis::horizontal);
        case VertexKind::bottom_left: return reflect(f, Axis::both);
    }
    throw std::logic_error("unknown vertex kind");
}

ReflectionAnalysis analyze_reflection(const Family& f, VertexKind kind, int k) {
    ReflectionAnalysis out;
    out.kind = kind;
    const Family fam = family_for_kind(f, kind);
    out.profile = analyze_sweep(fam);
    out.horizontal = greedy_lines(fam, Orientation::horizontal);
    out.vertical = greedy_lines(fam, Orientation::vertical);
    const std::vector<Vertex> type_L = extract_type_L(out.profile, k);
    out.records = assign_contributions(fam, out.vertical, out.horizontal, type_L);
    classify_inner_extremal(out.records);
    out.s = tabulate_S(out.records, k, out.horizontal.line_count(),
                       out.vertical.line_count());
    return out;
}

namespace {

struct CheckBuilder {
    std::vector<BoundCheck> checks;

    void add(const std::string& name, bool pass, const std::string& detail) {
        checks.push_back(BoundCheck{name, pass, false, detail});
    }
    void add_skipped(const std::string& name, const std::string& detail) {
        checks.push_back(BoundCheck{name, true, true, detail});
    }
};

std::string kind_tag(VertexKind kind) {
    return vertex_kind_name(kind);
}

bool profile_consistent(const ArrangementProfile& prof, std::string& problem) {
    std::int64_t hist_total = 0;
    for (std::int64_t c : prof.depth_histogram) hist_total += c;
    if (hist_total != prof.vertex_count()) {
        problem = "histogram total differs from vertex count";
        return false;
    }
    const std::int64_t expected_union =
        prof.depth_histogram.empty() ? 0 : prof.depth_histogram[0];
    if (prof.union_complexity != expected_union) {
        problem = "union complexity differs from depth-0 count";
        return false;
    }
    for (std::size_t d = 0; d < prof.depth_histogram.size(); ++d) {
        std::int64_t across_types = 0;
        for (const auto& counts : prof.per_type_counts) {
            across_types += d < counts.size() ? counts[d] : 0;
        }
        if (across_types != prof.depth_histogram[d]) {
            problem = "per-type counts do not partition depth " + std::to_string(d);
            return false;
        }
    }
    return true;
}

bool witnesses_disjoint(const Family& f, const PiercingStructure& ps,
                        std::string& problem) {
    for (std::size_t i = 0; i < ps.witnesses.size(); ++i) {
        for (std::size_t j = i + 1; j < ps.witnesses.size(); ++j) {
            const Rect& a = f[static_cast<std::size_t>(ps.witnesses[i])];
            const Rect& b = f[static_cast<std::size_t>(ps.witnesses[j])];
            if (intersects(a, b)) {
                problem = "witnesses " + std::to_string(a.id) + " and " +
                          std::to_string(b.id) + " intersect";
                return false;
            }
        }
    }
    return true;
}

}  // namespace

BoundReport verify(const Family& f, int k, const VerifyOptions& opts) {
    if (k < 0) throw std::invalid_argument("verify requires k >= 0");
    require_general_position(f);

    BoundReport report;
    report.n = static_cast<std::int64_t>(f.size());
    report.k = k;

    std::array<ReflectionAnalysis, 4> refs = {
        analyze_reflection(f, VertexKind::top_right, k),
        analyze_reflection(f, VertexKind::top_left, k),
        analyze_reflection(f, VertexKind::bottom_right, k),
        analyze_reflection(f, VertexKind::bottom_left, k),
    };
    const ArrangementProfile& identity = refs[0].profile;

    report.q_h = refs[0].horizontal.line_count();
    report.q_v = refs[0].vertical.line_count();
    report.measured_leq_k = identity.level_complexity(k);

    if (opts.known_nu) {
        report.nu = *opts.known_nu;
        report.nu_source = "provided";
    } else if (f.size() <= static_cast<std::size_t>(opts.exact_packing_limit) &&
               opts.exact_packing_limit <= 64) {
        report.nu = packing_number_exact(f, opts.exact_packing_limit).nu;
        report.nu_source = "exact";
    } else {
        report.nu_source = "unknown";
    }

    const std::int64_t n = report.n;
    const std::int64_t cap = inner_capacity(k);
    std::int64_t s_max = 0;
    std::int64_t greedy_bound_total = 0;
    std::array<std::int64_t, 4> greedy_bounds{};
    for (std::size_t i = 0; i < 4; ++i) {
        const ReflectionAnalysis& ra = refs[i];
        report.x_leq_k_per_type[i] = static_cast<std::int64_t>(ra.records.size());
        for (const ContributionRecord& rec : ra.records) {
            if (rec.kind == ContributionRecord::Kind::inner) {
                report.inner_total += 1;
            } else {
                report.extremal_total += 1;
            }
        }
        report.same_line_witness_inner += count_same_line_witness_inner(ra.records);
        s_max = std::max(s_max, ra.s.max_entry());
        greedy_bounds[i] =
            2 * (static_cast<std::int64_t>(k) + 1) * n +
            ra.horizontal.line_count() *
                std::max<std::int64_t>(0, ra.vertical.line_count() - 2) * cap;
        greedy_bound_total += greedy_bounds[i];
    }

    auto& values = report.bound_values;
    values["leq_k_measured"] = report.measured_leq_k;
    values["s_matrix_bound"] = cap;
    values["s_matrix_max"] = s_max;
    values["inner_total"] = report.inner_total;
    values["extremal_total"] = report.extremal_total;
    values["same_line_witness_inner"] = report.same_line_witness_inner;
    values["q_h"] = report.q_h;
    values["q_v"] = report.q_v;
    values["theorem_2_5_greedy_bound"] = greedy_bound_total;
    for (std::size_t i = 0; i < 4; ++i) {
        const std::string tag = kind_tag(kAllVertexKinds[i]);
        values["x_leq_k_" + tag] = report.x_leq_k_per_type[i];
        values["eq_3_greedy_bound_" + tag] = greedy_bounds[i];
        values["q_h_" + tag] = refs[i].horizontal.line_count();
        values["q_v_" + tag] = refs[i].vertical.line_count();
    }
    if (report.nu) {
        values["nu"] = *report.nu;
        if (n >= 1) {
            values["theorem_2_5_bound"] = exact_bound_leq_k(n, *report.nu + 1, k);
            values["eq_3_bound"] = exact_bound_X(n, *report.nu + 1, k);
        }
    }

    CheckBuilder cb;

    {  // floor/line assignment per reflection and axis
        bool pass = true;
        std::string detail;
        for (const ReflectionAnalysis& ra : refs) {
            const Family fam = family_for_kind(f, ra.kind);
            for (const PiercingStructure* ps : {&ra.horizontal, &ra.vertical}) {
                if (const auto violation = check_floor_property(fam, *ps)) {
                    pass = false;
                    detail = kind_tag(ra.kind) + ": " + violation->what;
                    break;
                }
            }
            if (!pass) break;
        }
        cb.add("observation_2_1_floor_lines", pass, detail);
    }

    {  // at most one record per (a, line, depth); falsifiable on valid data
        bool pass = true;
        std::string detail;
        for (const ReflectionAnalysis& ra : refs) {
            if (const auto violation = check_depth_uniqueness(ra.records)) {
                pass = false;
                detail = kind_tag(ra.kind) + ": " + violation->what;
                break;
            }
        }
        cb.add("observation_2_2_depth_uniqueness", pass, detail);
    }

    {  // inner record on line i: a meets lines i and i+1
        bool pass = true;
        std::string detail;
        for (const ReflectionAnalysis& ra : refs) {
            const Family fam = family_for_kind(f, ra.kind);
            if (const auto violation =
                    check_inner_flanking_lines(fam, ra.vertical, ra.records)) {
                pass = false;
                detail = kind_tag(ra.kind) + ": " + violation->what;
                break;
            }
        }
        cb.add("observation_2_3_inner_flanked", pass, detail);
    }

    {  // depth grows with the rank in decreasing x per (a, line)
        bool pass = true;
        std::string detail;
        for (const ReflectionAnalysis& ra : refs) {
            if (const auto violation = check_depth_chain(ra.records)) {
                pass = false;
                detail = kind_tag(ra.kind) + ": " + violation->what;
                break;
            }
        }
        cb.add("proposition_2_4_depth_chain", pass, detail);
    }

    {  // every S entry within the inner capacity
        bool pass = true;
        std::string detail;
        for (const ReflectionAnalysis& ra : refs) {
            for (const auto& [key, count] : ra.s.entries) {
                if (count > cap) {
                    pass = false;
                    std::ostringstream msg;
                    msg << kind_tag(ra.kind) << ": S[" << key.first << ","
                        << key.second << "]=" << count << " exceeds " << cap;
                    detail = msg.str();
                    break;
                }
            }
            if (!pass) break;
        }
        std::ostringstream msg;
        if (pass) msg << "max entry " << s_max << " <= " << cap;
        cb.add("proposition_2_4_s_matrix", pass, pass ? msg.str() : detail);
    }

    {  // extremal records per rectangle
        const std::int64_t per_rect_cap = 2 * (static_cast<std::int64_t>(k) + 1);
        bool pass = true;
        std::string detail;
        for (const ReflectionAnalysis& ra : refs) {
            std::map<RectId, std::int64_t> per_rect;
            for (const ContributionRecord& rec : ra.records) {
                if (rec.kind == ContributionRecord::Kind::extremal) {
                    per_rect[rec.a_id] += 1;
                }
            }
            for (const auto& [a, count] : per_rect) {
                if (count > per_rect_cap) {
                    pass = false;
                    std::ostringstream msg;
                    msg << kind_tag(ra.kind) << ": rect " << a << " carries " << count
                        << " extremal records, cap " << per_rect_cap;
                    detail = msg.str();
                    break;
                }
            }
            if (!pass) break;
        }
        cb.add("theorem_2_5_extremal_per_rect", pass, detail);
    }

    if (n < 1) {  // bound formulas start at n = 1; nothing to bound anyway
        cb.add("eq_3_type_L_nu", true, "empty family");
    } else if (report.nu) {  // per-type bound with p-1 = nu
        const std::int64_t bound = exact_bound_X(n, *report.nu + 1, k);
        bool pass = true;
        std::string detail;
        for (std::size_t i = 0; i < 4; ++i) {
            if (report.x_leq_k_per_type[i] > bound) {
                pass = false;
                detail = std::string(kind_tag(kAllVertexKinds[i])) + ": " +
                         std::to_string(report.x_leq_k_per_type[i]) + " > " +
                         std::to_string(bound);
                break;
            }
        }
        if (pass) {
            std::ostringstream msg;
            msg << "max type count "
                << *std::max_element(report.x_leq_k_per_type.begin(),
                                     report.x_leq_k_per_type.end())
                << " <= " << bound;
            detail = msg.str();
        }
        cb.add("eq_3_type_L_nu", pass, detail);
    } else {
        cb.add_skipped("eq_3_type_L_nu", "packing number unknown");
    }

    {  // per-type bound with the reflection's own line counts
        bool pass = true;
        std::string detail;
        for (std::size_t i = 0; i < 4; ++i) {
            if (report.x_leq_k_per_type[i] > greedy_bounds[i]) {
                pass = false;
                detail = std::string(kind_tag(kAllVertexKinds[i])) + ": " +
                         std::to_string(report.x_leq_k_per_type[i]) + " > " +
                         std::to_string(greedy_bounds[i]);
                break;
            }
        }
        cb.add("eq_3_type_L_greedy", pass, detail);
    }

    if (n < 1) {
        cb.add("theorem_2_5_leq_k", true, "empty family");
    } else if (report.nu) {
        const std::int64_t bound = exact_bound_leq_k(n, *report.nu + 1, k);
        const bool pass = report.measured_leq_k <= bound;
        std::ostringstream msg;
        msg << report.measured_leq_k << " <= " << bound;
        cb.add("theorem_2_5_leq_k", pass, msg.str());
    } else {
        cb.add_skipped("theorem_2_5_leq_k", "packing number unknown");
    }

    {
        const bool pass = report.measured_leq_k <= greedy_bound_total;
        std::ostringstream msg;
        msg << report.measured_leq_k << " <= " << greedy_bound_total;
        cb.add("theorem_2_5_leq_k_greedy", pass, msg.str());
    }

    {  // each vertex is type (top,right) in exactly one reflection
        std::int64_t across = 0;
        bool pass = true;
        std::string detail;
        for (std::size_t i = 0; i < 4; ++i) {
            across += report.x_leq_k_per_type[i];
            std::int64_t identity_count = 0;
            const auto& counts = identity.per_type_counts[i];
            for (std::size_t d = 0;
                 d < counts.size() && d <= static_cast<std::size_t>(k); ++d) {
                identity_count += counts[d];
            }
            if (identity_count != report.x_leq_k_per_type[i]) {
                pass = false;
                detail = std::string(kind_tag(kAllVertexKinds[i])) +
                         ": reflected pipeline count " +
                         std::to_string(report.x_leq_k_per_type[i]) +
                         " differs from identity profile count " +
                         std::to_string(identity_count);
                break;
            }
        }
        if (pass && across != report.measured_leq_k) {
            pass = false;
            detail = "type counts sum to " + std::to_string(across) + ", expected " +
                     std::to_string(report.measured_leq_k);
        }
        cb.add("partition_type_L_sum", pass, detail);
    }

    {  // inner + extremal partition the records of every reflection
        bool pass = true;
        std::string detail;
        for (std::size_t i = 0; i < 4; ++i) {
            std::int64_t inner = 0;
            std::int64_t extremal = 0;
            for (const ContributionRecord& rec : refs[i].records) {
                if (rec.kind == ContributionRecord::Kind::inner) {
                    ++inner;
                } else if (rec.kind == ContributionRecord::Kind::extremal) {
                    ++extremal;
                } else {
                    pass = false;
                }
            }
            if (!pass ||
                inner + extremal != report.x_leq_k_per_type[i]) {
                pass = false;
                detail = std::string(kind_tag(kAllVertexKinds[i])) +
                         ": inner+extremal != record count";
                break;
            }
        }
        cb.add("partition_inner_extremal", pass, detail);
    }

    {  // internal histogram identities of all four profiles
        bool pass = true;
        std::string detail;
        for (const ReflectionAnalysis& ra : refs) {
            std::string problem;
            if (!profile_consistent(ra.profile, problem)) {
                pass = false;
                detail = kind_tag(ra.kind) + ": " + problem;
                break;
            }
        }
        cb.add("profile_consistency", pass, detail);
    }

    {  // greedy witnesses disjoint; line counts within the packing number
        bool pass = true;
        std::string detail;
        for (const ReflectionAnalysis& ra : refs) {
            const Family fam = family_for_kind(f, ra.kind);
            std::string problem;
            if (!witnesses_disjoint(fam, ra.horizontal, problem) ||
                !witnesses_disjoint(fam, ra.vertical, problem)) {
                pass = false;
                detail = kind_tag(ra.kind) + ": " + problem;
                break;
            }
            if (report.nu && (ra.horizontal.line_count() > *report.nu ||
                              ra.vertical.line_count() > *report.nu)) {
                pass = false;
                detail = kind_tag(ra.kind) + ": greedy line count exceeds nu=" +
                         std::to_string(*report.nu);
                break;
            }
        }
        cb.add("packing_greedy_consistency", pass, detail);
    }

    report.checks = std::move(cb.checks);
    return report;
}

}  // namespace rectlevel
