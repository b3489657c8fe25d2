#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace gwb {

using json = nlohmann::json;

// Base for all thrown conditions. `detail` carries structured witness data
// (offending factors, shifts, degrees) so the CLI can surface it in reports.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg, json detail = json::object())
        : std::runtime_error(msg), detail_(std::move(detail)) {}

    const json& detail() const { return detail_; }

private:
    json detail_;
};

// Input text / JSON / flag problems. CLI exit code 2.
class ParseError : public Error {
public:
    using Error::Error;
};

// Violated mathematical precondition or invariant. CLI exit code 1 when it
// amounts to a failed check on well-formed input.
class MathError : public Error {
public:
    using Error::Error;
};

}  // namespace gwb
