#pragma once

#include <stdexcept>
#include <string>

namespace ospq {

// Raised when a Laurent division leaves a nonzero remainder.  In this
// library that always means a convention error upstream (sign character,
// parity or domain enumeration), so the message carries context.
struct NonExactDivision : std::runtime_error {
    explicit NonExactDivision(const std::string& what) : std::runtime_error(what) {}
};

// Raised when the normalization sum c^{-1} vanishes (excluded parameter range).
struct DegenerateNormalization : std::runtime_error {
    explicit DegenerateNormalization(const std::string& what) : std::runtime_error(what) {}
};

// Raised by table construction when a required identity fails; names the
// first violated identity.
struct ValidationFailure : std::runtime_error {
    explicit ValidationFailure(const std::string& identity) : std::runtime_error(identity) {}
};

// Raised when a vertex cannot be removed by a blow-down move.
struct NotBlowDownable : std::runtime_error {
    explicit NotBlowDownable(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a plumbing graph contains a cycle.
struct CycleDetected : std::runtime_error {
    explicit CycleDetected(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the graph text parser; carries the 1-based line number.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// Raised when a computation would exceed a configured resource budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ospq
