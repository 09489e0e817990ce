#include "rectlevel/report.hpp"

#include <string>

namespace rectlevel {

using nlohmann::json;

namespace {

json pairs_array(const std::vector<std::int64_t>& counts) {
    json arr = json::array();
    for (std::size_t d = 0; d < counts.size(); ++d) {
        if (counts[d] == 0) continue;
        arr.push_back(json::array({static_cast<std::int64_t>(d), counts[d]}));
    }
    return arr;
}

json piercing_json(const PiercingStructure& ps) {
    json j;
    j["q"] = ps.line_count();
    j["lines"] = ps.lines;
    j["witnesses"] = ps.witnesses;
    j["sentinel"] = ps.sentinel;
    j["floor_of"] = ps.floor_of;
    return j;
}

json rects_json(const Family& f) {
    json arr = json::array();
    for (const Rect& r : f) {
        arr.push_back(json::array({r.x_min, r.y_min, r.x_max, r.y_max}));
    }
    return arr;
}

}  // namespace

json bound_report_to_json(const BoundReport& report) {
    json j;
    j["n"] = report.n;
    j["k"] = report.k;
    if (report.nu) {
        j["nu_exact"] = *report.nu;
    } else {
        j["nu_exact"] = nullptr;
    }
    j["nu_source"] = report.nu_source;
    j["q_h"] = report.q_h;
    j["q_v"] = report.q_v;
    j["measured_leq_k"] = report.measured_leq_k;
    json per_type;
    for (std::size_t i = 0; i < 4; ++i) {
        per_type[vertex_kind_name(kAllVertexKinds[i])] = report.x_leq_k_per_type[i];
    }
    j["measured_X_leq_k_per_type"] = per_type;
    j["inner_total"] = report.inner_total;
    j["extremal_total"] = report.extremal_total;
    j["same_line_witness_inner"] = report.same_line_witness_inner;
    j["bound_values"] = report.bound_values;
    json checks = json::array();
    for (const BoundCheck& c : report.checks) {
        json entry;
        entry["name"] = c.name;
        entry["pass"] = c.pass;
        entry["skipped"] = c.skipped;
        entry["detail"] = c.detail;
        checks.push_back(entry);
    }
    j["checks"] = checks;
    j["all_passed"] = report.all_passed();
    return j;
}

json report_document(const Family& f, const std::string& source, int k,
                     const ArrangementProfile& profile, const std::string& engine,
                     const BoundReport* bounds, int exact_packing_limit) {
    json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["engine"] = engine;

    json instance;
    instance["n"] = static_cast<std::int64_t>(f.size());
    instance["source"] = source;
    doc["instance"] = instance;

    json analysis;
    analysis["union_complexity"] = profile.union_complexity;
    analysis["vertex_count"] = profile.vertex_count();
    analysis["depth_histogram"] = pairs_array(profile.depth_histogram);
    json leq = json::array();
    for (int kk = 0; kk <= k; ++kk) {
        leq.push_back(json::array({kk, profile.level_complexity(kk)}));
    }
    analysis["leq_k"] = leq;
    doc["analysis"] = analysis;

    const PiercingStructure horizontal = greedy_lines(f, Orientation::horizontal);
    const PiercingStructure vertical = greedy_lines(f, Orientation::vertical);
    json piercing;
    piercing["horizontal"] = piercing_json(horizontal);
    piercing["vertical"] = piercing_json(vertical);
    doc["piercing"] = piercing;

    json packing;
    const PackingBounds pb = packing_bounds(f, exact_packing_limit);
    packing["lower_bound"] = pb.lower;
    if (bounds && bounds->nu) {
        packing["nu"] = *bounds->nu;
        packing["source"] = bounds->nu_source;
    } else if (pb.exact) {
        packing["nu"] = pb.exact->nu;
        packing["source"] = "exact";
        packing["witness"] = pb.exact->witness;
    } else {
        packing["nu"] = nullptr;
        packing["source"] = "unknown";
    }
    doc["packing"] = packing;

    json classification;
    classification["k"] = k;
    if (bounds) {
        json per_type;
        for (std::size_t i = 0; i < 4; ++i) {
            per_type[vertex_kind_name(kAllVertexKinds[i])] =
                bounds->x_leq_k_per_type[i];
        }
        classification["per_type_counts"] = per_type;
        classification["inner_total"] = bounds->inner_total;
        classification["extremal_total"] = bounds->extremal_total;
        const auto it = bounds->bound_values.find("s_matrix_max");
        classification["s_matrix_max"] =
            it == bounds->bound_values.end() ? 0 : it->second;
        classification["same_line_witness_inner"] = bounds->same_line_witness_inner;
    } else {
        json per_type;
        for (std::size_t i = 0; i < 4; ++i) {
            std::int64_t count = 0;
            const auto& counts = profile.per_type_counts[i];
            for (std::size_t d = 0;
                 d < counts.size() && d <= static_cast<std::size_t>(k); ++d) {
                count += counts[d];
            }
            per_type[vertex_kind_name(kAllVertexKinds[i])] = count;
        }
        classification["per_type_counts"] = per_type;
    }
    doc["classification"] = classification;

    if (bounds) {
        const json bj = bound_report_to_json(*bounds);
        doc["checks"] = bj["checks"];
        doc["bound_values"] = bj["bound_values"];
        doc["all_passed"] = bj["all_passed"];
        doc["nu_exact"] = bj["nu_exact"];
        doc["nu_source"] = bj["nu_source"];
        if (!bounds->all_passed()) {
            // machine-readable counterexample for minimization
            json dump;
            dump["rects"] = rects_json(f);
            json failing = json::array();
            for (const BoundCheck& c : bounds->checks) {
                if (!c.skipped && !c.pass) {
                    failing.push_back(json{{"name", c.name}, {"detail", c.detail}});
                }
            }
            dump["failed_checks"] = failing;
            doc["counterexample"] = dump;
        }
    }
    return doc;
}

std::string dump_report(const json& doc) {
    return doc.dump(2) + "\n";
}

}  // namespace rectlevel
