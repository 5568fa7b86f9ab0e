#include "trajsmooth/error.hpp"

namespace trajsmooth {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::NonUniformLength: return "NonUniformLength";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::MissingPredecessor: return "MissingPredecessor";
    case ErrorCode::IncompatibleLength: return "IncompatibleLength";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::AllocationLimit: return "AllocationLimit";
    case ErrorCode::InconsistentV: return "InconsistentV";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::GapError: return "GapError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace trajsmooth
