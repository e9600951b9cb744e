#pragma once

#include <stdexcept>
#include <string>

namespace addbasis {

// Invalid argument or malformed input.  The CLI maps this to exit code 2.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Syntax error in a placement file, carrying the 1-based line number.
struct ParseError : InputError {
    int line;

    ParseError(int line_no, const std::string& msg)
        : InputError("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

// A certificate or bound that should hold was found violated.  The CLI maps
// this to exit code 1.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace addbasis
