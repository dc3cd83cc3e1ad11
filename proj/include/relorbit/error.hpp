#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace relorbit {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  RationalInput,
  DepthZero,
  DepthExceeded,
  PrecisionExhausted,
  FieldMismatch,
  DivisionByZero,
  DegenerateSegment,
  NoCandidate,
  MultipleCandidates,
  NotHomologous,
  DegenerateCell,
  NonUnimodular,
  SingularityCollision,
  HypothesisViolated,
  EmptyInput,
  TooLarge,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string module, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  const std::string& module() const noexcept { return module_; }

 private:
  ErrorCode code_;
  std::string module_;
};

// Raised when an interval comparison cannot be decided at the current precision.
class PrecisionExhausted : public Error {
 public:
  PrecisionExhausted(std::string module, const std::string& message)
      : Error(ErrorCode::PrecisionExhausted, std::move(module), message) {}
};

}  // namespace relorbit
