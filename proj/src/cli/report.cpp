#include "ohasse/cli/report.hpp"

#include <sstream>

namespace ohasse::cli {
namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void csv_line(std::ostringstream& os, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
    os << '\n';
}

std::string opt_bool(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : ""; }

Json row_to_json(const PlaceReport& r) {
    Json j;
    j["place"] = r.place.to_string();
    j["norm"] = r.norm.get_str();
    j["good"] = r.good;
    j["separable"] = r.separable ? Json(*r.separable) : Json(nullptr);
    j["tail"] = r.rho ? Json(r.rho->tail) : Json(nullptr);
    j["cycle"] = r.rho ? Json(r.rho->cycle) : Json(nullptr);
    j["periodic"] = to_string(r.periodic);
    j["mode"] = to_string(r.mode);
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

PlaceReport row_from_json(const Json& j) {
    PlaceReport r;
    r.place = Place::parse(j.at("place").get<std::string>());
    r.norm = Integer(j.at("norm").get<std::string>());
    r.good = j.at("good").get<bool>();
    if (!j.at("separable").is_null()) r.separable = j.at("separable").get<bool>();
    if (!j.at("tail").is_null()) r.rho = RhoShape{j.at("tail").get<std::uint64_t>(), j.at("cycle").get<std::uint64_t>()};
    r.periodic = verdict_from_string(j.at("periodic").get<std::string>());
    r.mode = mode_from_string(j.at("mode").get<std::string>());
    if (j.contains("error")) r.error = j.at("error").get<std::string>();
    return r;
}

const char* policy_name(BadPlacePolicy p) { return p == BadPlacePolicy::Exclude ? "exclude" : "pessimistic"; }

}  // namespace

Json density_to_json(const DensityReport& d) {
    Json j;
    j["num"] = d.density.num().get_str();
    j["den"] = d.density.den().get_str();
    j["decimal"] = d.decimal();
    j["bound"] = d.bound.get_str();
    j["total"] = d.total;
    j["periodic"] = d.periodic;
    j["non_periodic"] = d.non_periodic;
    j["bad"] = d.bad;
    j["unknown"] = d.unknown;
    j["policy"] = policy_name(d.policy);
    return j;
}

DensityReport density_from_json(const Json& j) {
    DensityReport d;
    d.density = Rational(Integer(j.at("num").get<std::string>()), Integer(j.at("den").get<std::string>()));
    d.bound = Integer(j.at("bound").get<std::string>());
    d.total = j.at("total").get<std::uint64_t>();
    d.periodic = j.at("periodic").get<std::uint64_t>();
    d.non_periodic = j.at("non_periodic").get<std::uint64_t>();
    d.bad = j.at("bad").get<std::uint64_t>();
    d.unknown = j.at("unknown").get<std::uint64_t>();
    d.policy = j.at("policy").get<std::string>() == "exclude" ? BadPlacePolicy::Exclude : BadPlacePolicy::Pessimistic;
    return d;
}

std::string emit_csv(const Report& r) {
    std::ostringstream os;
    if (r.table) {
        csv_line(os, r.table->columns);
        for (const auto& row : r.table->rows) csv_line(os, row);
    } else {
        csv_line(os, {"place", "norm", "good", "separable", "tail", "cycle", "periodic", "mode"});
        for (const auto& row : r.rows)
            csv_line(os, {row.place.to_string(), row.norm.get_str(), row.good ? "true" : "false",
                          opt_bool(row.separable), row.rho ? std::to_string(row.rho->tail) : "",
                          row.rho ? std::to_string(row.rho->cycle) : "", to_string(row.periodic),
                          to_string(row.mode)});
    }
    for (const auto& [key, value] : r.summary.items())
        os << "# " << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    if (!r.violations.empty()) {
        os << "# violations=";
        for (std::size_t i = 0; i < r.violations.size(); ++i) os << (i ? ";" : "") << r.violations[i];
        os << '\n';
    }
    if (r.density) os << "# density=" << r.density->density.num() << '/' << r.density->density.den() << '\n';
    return os.str();
}

Json to_json(const Report& r) {
    Json j;
    j["experiment"] = r.experiment;
    j["map"] = r.map;
    j["alpha"] = r.alpha;
    j["field"] = r.field;
    j["bound"] = r.bound.get_str();
    j["options"] = r.options;
    j["rows"] = Json::array();
    for (const auto& row : r.rows) j["rows"].push_back(row_to_json(row));
    if (r.table) j["table"] = Json{{"columns", r.table->columns}, {"rows", r.table->rows}};
    if (!r.series.empty()) {
        j["series"] = Json::array();
        for (const auto& d : r.series) j["series"].push_back(density_to_json(d));
    }
    j["summary"] = r.summary;
    j["density"] = r.density ? density_to_json(*r.density) : Json(nullptr);
    j["violations"] = r.violations;
    return j;
}

std::string emit_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

Report report_from_json(const Json& j) {
    Report r;
    r.experiment = j.at("experiment").get<std::string>();
    r.map = j.at("map").get<std::string>();
    r.alpha = j.at("alpha").get<std::string>();
    r.field = j.at("field").get<std::string>();
    r.bound = Integer(j.at("bound").get<std::string>());
    r.options = j.at("options");
    for (const auto& row : j.at("rows")) r.rows.push_back(row_from_json(row));
    if (j.contains("table"))
        r.table = Table{j["table"].at("columns").get<std::vector<std::string>>(),
                        j["table"].at("rows").get<std::vector<std::vector<std::string>>>()};
    if (j.contains("series"))
        for (const auto& d : j.at("series")) r.series.push_back(density_from_json(d));
    r.summary = j.at("summary");
    if (!j.at("density").is_null()) r.density = density_from_json(j.at("density"));
    r.violations = j.at("violations").get<std::vector<std::string>>();
    return r;
}

std::string emit(const Report& r, const std::string& format) {
    if (format == "json") return emit_json(r);
    if (format == "csv") return emit_csv(r);
    throw std::invalid_argument("unknown format " + format + " (expected csv or json)");
}

}  // namespace ohasse::cli
