#include <intervalkit/errors.hpp>

namespace intervalkit {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::DegenerateInterval: return "DegenerateInterval";
    case ErrorCode::InvalidInterval: return "InvalidInterval";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::DivisionUndefined: return "DivisionUndefined";
    case ErrorCode::MooreDivByZeroSpanning: return "MooreDivByZeroSpanning";
    case ErrorCode::HDiffNotExists: return "HDiffNotExists";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::TypeError: return "TypeError";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::MathDomain: return "MathDomain";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::ParamArityMismatch: return "ParamArityMismatch";
    case ErrorCode::DomainBoundary: return "DomainBoundary";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NonDifferentiable: return "NonDifferentiable";
    case ErrorCode::MaxDepthExceeded: return "MaxDepthExceeded";
    case ErrorCode::NonPositiveIntegrand: return "NonPositiveIntegrand";
    case ErrorCode::RhsEvaluation: return "RhsEvaluation";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::BranchInfeasible: return "BranchInfeasible";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

} // namespace intervalkit
