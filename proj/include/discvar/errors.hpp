#pragma once

#include <stdexcept>
#include <string>

namespace discvar {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands built over different ring contexts.
struct ring_mismatch : error {
    using error::error;
};

// A coefficient denominator vanished modulo the chosen prime; the caller
// should retry with another prime.
struct bad_prime : error {
    using error::error;
};

// Exponent or degree left the machine-representable range.
struct degree_overflow : error {
    using error::error;
};

// A resource guard tripped (e.g. the finite-field enumeration bound).
struct guard_exceeded : error {
    using error::error;
};

// Positioned syntax error from the system-file parser.  Lines and columns
// are 1-based.
struct parse_error : error {
    int line;
    int column;
    parse_error(int line_, int column_, const std::string& what_)
        : error("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " + what_),
          line(line_),
          column(column_) {}
};

// An oracle check ran to completion and failed, or no good prime exists.
struct oracle_failure : error {
    using error::error;
};

}  // namespace discvar
