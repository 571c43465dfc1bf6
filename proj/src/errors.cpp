#include "prefix_sort/errors.hpp"

namespace prefix_sort {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateValue: return "DuplicateValue";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DegenerateMove: return "DegenerateMove";
    case ErrorCode::CursorNotSorted: return "CursorNotSorted";
    case ErrorCode::Unclassifiable: return "Unclassifiable";
    case ErrorCode::NoTrappedEdge: return "NoTrappedEdge";
    case ErrorCode::NoMatch: return "NoMatch";
    case ErrorCode::GuardExceeded: return "GuardExceeded";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::EmptyReport: return "EmptyReport";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code),
      message_(message) {}

void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace prefix_sort
