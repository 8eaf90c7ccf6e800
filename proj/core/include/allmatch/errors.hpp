#pragma once

#include <stdexcept>
#include <string>

namespace allmatch {

// Input that fails structural validation: ragged rows, entries outside {0,1},
// malformed JSON, out-of-range parameters. Maps to CLI exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Well-formed input that exceeds a documented implementation limit
// (matrix too wide, enumeration too large). Maps to CLI exit code 3.
class CapabilityError : public std::runtime_error {
public:
    explicit CapabilityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Critical ratio requested where E(Y) = 0, so E(Y^2)/E^2(Y) does not exist.
class UndefinedRatioError : public std::runtime_error {
public:
    explicit UndefinedRatioError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace allmatch
