#pragma once

#include <stdexcept>
#include <string>

namespace crystaldeg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input supplied by the caller: malformed shapes, out-of-range colors,
// mutually exclusive CLI flags, and so on. Maps to exit code 2 in the CLI.
class UsageError : public Error {
public:
    using Error::Error;
};

// A JSON document violated the graph schema. `pointer` locates the offending
// element (JSON-pointer syntax).
class SchemaError : public Error {
public:
    SchemaError(std::string pointer, const std::string& what)
        : Error(pointer + ": " + what), pointer_(std::move(pointer)) {}
    const std::string& pointer() const { return pointer_; }

private:
    std::string pointer_;
};

// A filling is not semi-standard; row/col are 1-based with row 1 the bottom row.
class TableauError : public Error {
public:
    TableauError(int row, int col, const std::string& what)
        : Error("cell (" + std::to_string(row) + "," + std::to_string(col) + "): " + what),
          row_(row),
          col_(col) {}
    int row() const { return row_; }
    int col() const { return col_; }

private:
    int row_;
    int col_;
};

// A check was invoked on a graph that does not satisfy the axioms it depends on.
class PrerequisiteError : public Error {
public:
    PrerequisiteError(std::string axiom, const std::string& what)
        : Error(what), axiom_(std::move(axiom)) {}
    const std::string& axiom() const { return axiom_; }

private:
    std::string axiom_;
};

// An internal contract that should hold on valid inputs was violated.
class InvariantError : public Error {
public:
    using Error::Error;
};

}  // namespace crystaldeg
