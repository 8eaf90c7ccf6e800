#pragma once

#include "allmatch/exact.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>

namespace allmatch {

// All report JSON uses ordered_json so column order is stable and the CSV
// header matches field declaration order.
using OrderedJson = nlohmann::ordered_json;

// "num/den" for non-integers, plain "num" otherwise.
std::string format_rational(const ExactRational& q);

// {"num": "...", "den": "...", "approx": double} with decimal strings.
OrderedJson rational_json(const ExactRational& q);

// Report envelope shared by every CLI command. `rows` is an array of flat
// objects; CSV output is the rows alone, one column per key of the first
// row. Timing fields are omitted entirely under deterministic mode so
// reruns are byte-identical.
struct ExperimentReport {
    std::string command;
    OrderedJson config = OrderedJson::object();
    std::uint64_t seed = 0;
    bool has_seed = false;
    bool deterministic = false;
    OrderedJson rows = OrderedJson::array();
    double runtime_ms = 0.0;

    OrderedJson to_json() const;
    std::string to_csv() const;

    // JSON or CSV per `format` ("json" | "csv").
    std::string render(const std::string& format) const;
};

std::string csv_escape(const std::string& field);

} // namespace allmatch
