#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace negset {

enum class ErrorCode {
  EmptyUniverse,
  DuplicateName,
  InvalidName,
  NotDouble,
  UniverseMismatch,
  EmptyFamily,
  UnknownObject,
  ReflexivePair,
  OverlappingKinds,
  DominanceNotStrictOrder,
  InputNotDisc,
  UnknownAgent,
  ParseError,
  ValidationError,
  UnboundName,
  ResolutionFailed,
  UniverseTooLarge,
  UnknownFixture,
  UnknownLaw,
};

/// Stable kebab-case identifier, used in reports and JSON output.
std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace negset
