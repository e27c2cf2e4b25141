#pragma once

#include <stdexcept>
#include <string>

namespace uwbd {

// Malformed input (a violated precondition), as opposed to a math failure.
class invalid_parameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Syntax error in an input file; carries a 1-based line number when known.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg, long line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}

    long line() const noexcept { return line_; }

private:
    long line_;
};

// A power-delay profile that violates its structural invariants.
class invalid_profile : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace uwbd
