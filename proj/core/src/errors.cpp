#include "odepoly/errors.hpp"

namespace odepoly {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NumericFailure: return "NumericFailure";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::NoBranch: return "NoBranch";
    case ErrorCode::EmptyEquation: return "EmptyEquation";
    case ErrorCode::SingularBasePoint: return "SingularBasePoint";
    case ErrorCode::NotFirstOrder: return "NotFirstOrder";
    case ErrorCode::ObstructedResonance: return "ObstructedResonance";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::InvalidM: return "InvalidM";
    case ErrorCode::NotAutonomous: return "NotAutonomous";
    case ErrorCode::InvalidBranch: return "InvalidBranch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorCode::ParseError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

void raise(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace odepoly
