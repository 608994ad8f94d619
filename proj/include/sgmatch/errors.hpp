#ifndef SGMATCH_ERRORS_HPP
#define SGMATCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sgmatch {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (graph/query/instance/witness documents).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

// Structurally invalid data (bad vertex index, non-edge walk step, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error("invalid: " + what) {}
};

// A witness that fails one of its certifying checks.
class WitnessError : public Error {
public:
    explicit WitnessError(const std::string& what) : Error("witness rejected: " + what) {}
};

// An exhaustive search exceeded its node budget.
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& what) : Error("budget exceeded: " + what) {}
};

} // namespace sgmatch

#endif
