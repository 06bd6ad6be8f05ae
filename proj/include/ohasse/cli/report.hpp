#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ohasse/scan/scan.hpp"

namespace ohasse::cli {

using Json = nlohmann::ordered_json;

// Free-form result table for experiments that do not produce place rows.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    friend bool operator==(const Table&, const Table&) = default;
};

// What every subcommand emits. Place rows follow the scan schema; `summary`
// holds scalar results in insertion order. Worker counts never enter a report.
struct Report {
    std::string experiment;
    std::string map;
    std::string alpha;
    std::string field;
    Integer bound = 0;
    Json options = Json::object();
    std::vector<PlaceReport> rows;
    std::optional<Table> table;
    std::vector<DensityReport> series;
    std::optional<DensityReport> density;
    std::vector<std::string> violations;
    Json summary = Json::object();

    friend bool operator==(const Report&, const Report&) = default;
};

// place,norm,good,separable,tail,cycle,periodic,mode rows (or the table when
// present), then `# key=value` summary lines, then `# density=num/den`.
std::string emit_csv(const Report& r);
Json to_json(const Report& r);
std::string emit_json(const Report& r);
Report report_from_json(const Json& j);

std::string emit(const Report& r, const std::string& format);

Json density_to_json(const DensityReport& d);
DensityReport density_from_json(const Json& j);

}  // namespace ohasse::cli
