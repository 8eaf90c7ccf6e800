#include "allmatch/report.hpp"

#include "allmatch/errors.hpp"

#include <sstream>

namespace allmatch {

std::string format_rational(const ExactRational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

OrderedJson rational_json(const ExactRational& q) {
    OrderedJson j;
    j["num"] = q.get_num().get_str();
    j["den"] = q.get_den().get_str();
    j["approx"] = to_double(q);
    return j;
}

OrderedJson ExperimentReport::to_json() const {
    OrderedJson j;
    j["command"] = command;
    j["config"] = config;
    if (has_seed) j["seed"] = seed;
    j["deterministic"] = deterministic;
    j["rows"] = rows;
    if (!deterministic) j["runtime_ms"] = runtime_ms;
    return j;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

namespace {

std::string cell_to_string(const OrderedJson& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_null()) return "";
    return v.dump();
}

} // namespace

std::string ExperimentReport::to_csv() const {
    std::ostringstream out;
    if (rows.empty()) return "";
    const auto& first = rows.front();
    bool lead = true;
    for (auto it = first.begin(); it != first.end(); ++it) {
        if (!lead) out << ',';
        out << csv_escape(it.key());
        lead = false;
    }
    out << '\n';
    for (const auto& row : rows) {
        lead = true;
        for (auto it = first.begin(); it != first.end(); ++it) {
            if (!lead) out << ',';
            if (row.contains(it.key())) out << csv_escape(cell_to_string(row.at(it.key())));
            lead = false;
        }
        out << '\n';
    }
    return out.str();
}

std::string ExperimentReport::render(const std::string& format) const {
    if (format == "json") return to_json().dump(2) + "\n";
    if (format == "csv") return to_csv();
    throw ValidationError("unknown format '" + format + "', expected json or csv");
}

} // namespace allmatch
