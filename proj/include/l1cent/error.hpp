// error.hpp - exception types shared by all modules
//
// input_error: malformed/invalid input (CLI exit code 1)
// numeric_error: degenerate numerical situation (CLI exit code 2)

#pragma once

#include <stdexcept>
#include <string>

namespace l1cent {

struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Parse failure with the 1-based line number of the offending line.
struct parse_error : input_error {
    parse_error(const std::string& msg, int line)
        : input_error(msg + " (line " + std::to_string(line) + ")"), line_number(line) {}
    int line_number;
};

struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace l1cent
