#include "lefkit/error.hpp"

namespace lefkit {

  std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::malformed_table:
        return "MalformedTable";
      case ErrorCode::bound_exceeded:
        return "BoundExceeded";
      case ErrorCode::cap_exceeded:
        return "CapExceeded";
      case ErrorCode::step_cap_exceeded:
        return "StepCapExceeded";
      case ErrorCode::not_terminating:
        return "NotTerminating";
      case ErrorCode::parse_error:
        return "ParseError";
      case ErrorCode::duplicate_element:
        return "DuplicateElement";
      case ErrorCode::undecided_equality:
        return "UndecidedEquality";
      case ErrorCode::word_too_long:
        return "WordTooLong";
      case ErrorCode::universe_mismatch:
        return "UniverseMismatch";
      case ErrorCode::precondition_failed:
        return "PreconditionFailed";
      case ErrorCode::empty_preimage:
        return "EmptyPreimage";
      case ErrorCode::corrupt_certificate:
        return "CorruptCertificate";
      case ErrorCode::invalid_input:
        return "InvalidInput";
    }
    return "Unknown";
  }

}  // namespace lefkit
