#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "rectlevel/arrangement.hpp"
#include "rectlevel/bounds.hpp"
#include "rectlevel/geometry.hpp"
#include "rectlevel/piercing.hpp"

namespace rectlevel {

inline constexpr int kReportSchemaVersion = 1;

nlohmann::json bound_report_to_json(const BoundReport& report);

// Full analysis document: instance metadata, depth profile, piercing,
// packing and classification summaries; checks included when a BoundReport
// is supplied. All numbers are integers and keys serialize sorted, so the
// document is byte-stable for a given instance.
nlohmann::json report_document(const Family& f, const std::string& source,
                               int k, const ArrangementProfile& profile,
                               const std::string& engine,
                               const BoundReport* bounds = nullptr,
                               int exact_packing_limit = kDefaultExactPackingLimit);

std::string dump_report(const nlohmann::json& doc);

}  // namespace rectlevel
