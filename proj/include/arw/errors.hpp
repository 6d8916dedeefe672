#pragma once

#include <stdexcept>
#include <string>

namespace arw {

/// Precondition violation on a library operation (weight mismatch, bad box, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Expression-syntax failure; position is a 0-based byte offset into the input.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    size_t pos;
};

/// Walk-config failure; where is a JSON-pointer-style field path.
struct ConfigError : std::runtime_error {
    ConfigError(const std::string& field, const std::string& msg)
        : std::runtime_error("config error at " + field + ": " + msg), where(field) {}
    std::string where;
};

/// A step would grow the mixture past the configured branch cap.
struct BranchCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace arw
