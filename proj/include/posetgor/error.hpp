#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace posetgor {

enum class ErrorKind {
  DuplicateElement,
  UnknownElementInCover,
  CycleDetected,
  NotComparable,
  NotAChain,
  IsAntichain,
  UnknownElement,
  DomainMismatch,
  NotInG,
  NotInS0,
  NotInT0,
  PreconditionViolated,
  NotMember,
  EmptyPoset,
  OutOfRange,
  BoxTooLarge,
  ParseError,
  InternalInvariant,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace posetgor
