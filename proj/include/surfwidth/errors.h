#pragma once

#include <stdexcept>
#include <string>

namespace surfwidth {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed combinatorial data (bad rotation, dangling edge id, ...).
struct StructuralError : Error {
    using Error::Error;
};

/// An operation was called outside its stated precondition.
struct PreconditionError : Error {
    using Error::Error;
};

/// A plain bad-argument error (out-of-range parameter, mismatched pair, ...).
struct ArgumentError : Error {
    using Error::Error;
};

/// Input data failed a semantic validation check.
struct ValidationError : Error {
    using Error::Error;
};

/// A configured search or size budget was exceeded.
struct ResourceExhausted : Error {
    using Error::Error;
};

/// Text-format error with a 1-based line number.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

} // namespace surfwidth
