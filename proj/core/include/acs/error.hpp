#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace acs {

enum class ErrorKind {
  InvalidArgument,
  NotAGroup,
  NotAHomomorphism,
  InvalidAction,
  OrderCapExceeded,
  MismatchedContext,
  NotACocycle,
  NotADivisor,
  NotASection,
  SizeCapExceeded,
  Overflow,
  NotSquarefree,
  InvalidFamily,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for the size/order caps; the CLI reports these with exit code 3.
  bool is_cap_violation() const noexcept {
    return kind_ == ErrorKind::OrderCapExceeded ||
           kind_ == ErrorKind::SizeCapExceeded;
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace acs
