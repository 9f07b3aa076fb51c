#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace padic {

// Base of every error raised by this library.  name() is a stable
// identifier (the class name) used by callers that report failures by
// category, e.g. the command-line tool.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
    virtual const char* name() const noexcept { return "Error"; }
};

// Context construction was given a composite (or otherwise non-prime) p.
class PrimalityError : public Error {
public:
    using Error::Error;
    const char* name() const noexcept override { return "PrimalityError"; }
};

// Context construction was given a precision below 1.
class PrecisionError : public Error {
public:
    using Error::Error;
    const char* name() const noexcept override { return "PrecisionError"; }
};

// Two operands belong to different contexts.
class ContextMismatch : public Error {
public:
    using Error::Error;
    const char* name() const noexcept override { return "ContextMismatch"; }
};

class DivisionByZero : public Error {
public:
    using Error::Error;
    const char* name() const noexcept override { return "DivisionByZero"; }
};

// sqrt of a number that has no square root in QQ_p.  The reason
// distinguishes an odd valuation from a non-residue unit part.
class NotASquare : public Error {
public:
    enum class Reason { OddValuation, NonResidueUnit };
    NotASquare(const std::string& msg, Reason r) : Error(msg), reason_(r) {}
    const char* name() const noexcept override { return "NotASquare"; }
    Reason reason() const noexcept { return reason_; }

private:
    Reason reason_;
};

// Argument lies outside the convergence domain of an analytic function.
class OutsideDomain : public Error {
public:
    using Error::Error;
    const char* name() const noexcept override { return "OutsideDomain"; }
};

// to_integer of a number with negative valuation.
class NegativeValuation : public Error {
public:
    using Error::Error;
    const char* name() const noexcept override { return "NegativeValuation"; }
};

// Malformed text input.  position() is the byte offset of the offending
// token within the input.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, std::size_t position)
        : Error(msg + " at position " + std::to_string(position)), position_(position) {}
    const char* name() const noexcept override { return "SyntaxError"; }
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Hensel seed is not a root of f modulo p.
class SeedNotRoot : public Error {
public:
    using Error::Error;
    const char* name() const noexcept override { return "SeedNotRoot"; }
};

// Hensel seed is a root of both f and f' modulo p.
class SingularSeed : public Error {
public:
    using Error::Error;
    const char* name() const noexcept override { return "SingularSeed"; }
};

// Newton iteration failed to reach a fixed point within its step budget.
// Not expected on any input that passes the seed checks.
class NoConvergence : public Error {
public:
    using Error::Error;
    const char* name() const noexcept override { return "NoConvergence"; }
};

} // namespace padic
