#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spincamo {

using NetId = int32_t;

/// Base error for all library failures.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the BENCH parser; carries the 1-based source line.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace spincamo
