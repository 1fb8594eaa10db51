#pragma once

#include <stdexcept>
#include <string>

namespace csum {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands belong to different groups.
struct group_mismatch_error : error {
    using error::error;
};

// Shape precondition violated (e.g. collapse of a 1xN matrix).
struct dimension_error : error {
    using error::error;
};

// Checked 64-bit integer arithmetic overflowed.
struct overflow_error : error {
    using error::error;
};

// Operation requires a finite group, or is otherwise not available.
struct unsupported_error : error {
    using error::error;
};

// Brute-force enumeration would exceed the configured budget.
struct budget_error : error {
    using error::error;
};

struct parse_error : error {
    parse_error(const std::string& msg, int line, int column)
        : error(msg + " at line " + std::to_string(line) + ", column " +
                std::to_string(column)),
          line(line),
          column(column) {}
    int line;
    int column;
};

} // namespace csum
