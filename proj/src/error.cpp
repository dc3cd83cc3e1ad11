#include "relorbit/error.hpp"

namespace relorbit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::RationalInput: return "RationalInput";
    case ErrorCode::DepthZero: return "DepthZero";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DegenerateSegment: return "DegenerateSegment";
    case ErrorCode::NoCandidate: return "NoCandidate";
    case ErrorCode::MultipleCandidates: return "MultipleCandidates";
    case ErrorCode::NotHomologous: return "NotHomologous";
    case ErrorCode::DegenerateCell: return "DegenerateCell";
    case ErrorCode::NonUnimodular: return "NonUnimodular";
    case ErrorCode::SingularityCollision: return "SingularityCollision";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string module, const std::string& message)
    : std::runtime_error(message), code_(code), module_(std::move(module)) {}

}  // namespace relorbit
