#include "opetope/error.hpp"

namespace ope {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::VarianceClash: return "VarianceClash";
    case ErrorCode::Incomplete: return "Incomplete";
    case ErrorCode::WrongShapeFamily: return "WrongShapeFamily";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::ClosedLoop: return "ClosedLoop";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::UndefinedLabel: return "UndefinedLabel";
    case ErrorCode::NotTreeShaped: return "NotTreeShaped";
    case ErrorCode::CompositeMismatch: return "CompositeMismatch";
    case ErrorCode::MismatchFound: return "MismatchFound";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace ope
