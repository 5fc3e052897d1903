#pragma once

#include <stdexcept>
#include <string>

namespace ope {

enum class ErrorCode {
  Syntax,
  VarianceClash,
  Incomplete,
  WrongShapeFamily,
  BoundExceeded,
  ClosedLoop,
  ShapeMismatch,
  ArityMismatch,
  TypeMismatch,
  UndefinedLabel,
  NotTreeShaped,
  CompositeMismatch,
  MismatchFound,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

// Every failure raised by the kernel carries one of the codes above; callers
// that need to branch on the failure kind (the C API, condition-B checks)
// switch on code() instead of parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  // The message without the code name.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(ErrorCode::Syntax, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ope
