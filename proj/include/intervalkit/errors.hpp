#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace intervalkit {

enum class ErrorCode {
    DegenerateInterval,
    InvalidInterval,
    Overflow,
    NotInvertible,
    DivisionUndefined,
    MooreDivByZeroSpanning,
    HDiffNotExists,
    GridMismatch,
    SyntaxError,
    TypeError,
    UnboundVariable,
    MathDomain,
    ParamOutOfRange,
    ParamArityMismatch,
    DomainBoundary,
    NonFinite,
    NonDifferentiable,
    MaxDepthExceeded,
    NonPositiveIntegrand,
    RhsEvaluation,
    NonConvergence,
    BranchInfeasible,
    InvalidConfig,
    Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base of every exception thrown by the library. The code is stable and is
/// what callers (and the CLI exit-code mapping) should branch on.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code)
    {
    }

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure; offset is the byte position of the offending token.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& what)
        : Error(ErrorCode::SyntaxError, what + " at offset " + std::to_string(offset)), offset_(offset)
    {
    }

    [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Right-hand side of an ODE could not be evaluated at time t.
class RhsEvaluationError : public Error {
public:
    RhsEvaluationError(double t, ErrorCode cause, const std::string& what)
        : Error(ErrorCode::RhsEvaluation, what + " (t = " + std::to_string(t) + ")"), t_(t), cause_(cause)
    {
    }

    [[nodiscard]] double time() const noexcept { return t_; }
    [[nodiscard]] ErrorCode cause() const noexcept { return cause_; }

private:
    double t_;
    ErrorCode cause_;
};

} // namespace intervalkit
