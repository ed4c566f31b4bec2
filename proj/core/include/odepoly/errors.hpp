#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace odepoly {

enum class ErrorCode {
  ZeroPolynomial,
  NumericFailure,
  NotSquarefree,
  NoBranch,
  EmptyEquation,
  SingularBasePoint,
  NotFirstOrder,
  ObstructedResonance,
  ZeroDenominator,
  NotReduced,
  InvalidM,
  NotAutonomous,
  InvalidBranch,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base of every error raised by the library. The code identifies the
/// failed precondition so callers (the CLI in particular) can map it to an
/// exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace odepoly
