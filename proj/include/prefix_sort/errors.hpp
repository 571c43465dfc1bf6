#pragma once
/**
 * @file errors.hpp
 * @brief Error codes and the exception type shared by the whole library.
 */

#include <stdexcept>
#include <string>

namespace prefix_sort {

enum class ErrorCode {
  DuplicateValue,
  OutOfRange,
  IndexOutOfRange,
  DegenerateMove,
  CursorNotSorted,
  Unclassifiable,
  NoTrappedEdge,
  NoMatch,
  GuardExceeded,
  SizeTooLarge,
  PreconditionViolated,
  IoError,
  EmptyReport,
  UsageError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const { return code_; }
  // The description without the leading code name (what() carries both).
  const std::string& message() const { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace prefix_sort
