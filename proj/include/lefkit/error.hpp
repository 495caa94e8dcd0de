#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lefkit {

  enum class ErrorCode {
    malformed_table,
    bound_exceeded,
    cap_exceeded,
    step_cap_exceeded,
    not_terminating,
    parse_error,
    duplicate_element,
    undecided_equality,
    word_too_long,
    universe_mismatch,
    precondition_failed,
    empty_preimage,
    corrupt_certificate,
    invalid_input
  };

  //! Stable machine-readable name, used by the CLI in error documents.
  std::string_view error_code_name(ErrorCode code) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(what), _code(code) {}

    ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

  [[noreturn]] inline void fail(ErrorCode code, std::string const& what) {
    throw Error(code, what);
  }

}  // namespace lefkit
