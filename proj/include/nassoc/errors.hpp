#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nassoc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct SingularError : Error {
    SingularError() : Error("matrix is singular") {}
    explicit SingularError(const std::string& what) : Error(what) {}
};

struct PoleError : Error {
    explicit PoleError(const std::string& what) : Error("pole at t=0: " + what) {}
};

struct ConstraintViolation : Error {
    using Error::Error;
};

struct SyntaxError : Error {
    std::size_t pos;
    SyntaxError(const std::string& msg, std::size_t p)
        : Error("syntax error at offset " + std::to_string(p) + ": " + msg), pos(p) {}
};

struct UnknownParameter : Error {
    std::string name;
    explicit UnknownParameter(const std::string& n) : Error("unknown parameter '" + n + "'"), name(n) {}
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct SymmetryConflict : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct UnknownId : Error {
    explicit UnknownId(const std::string& id) : Error("unknown catalog id '" + id + "'") {}
};

struct UnknownVariety : Error {
    explicit UnknownVariety(const std::string& v) : Error("unknown variety '" + v + "'") {}
};

struct NotAnAutomorphism : Error {
    using Error::Error;
};

struct BudgetExhausted : Error {
    BudgetExhausted() : Error("budget exhausted") {}
    explicit BudgetExhausted(const std::string& what) : Error(what) {}
};

}  // namespace nassoc
