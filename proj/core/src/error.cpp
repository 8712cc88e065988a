#include "negset/error.hpp"

namespace negset {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyUniverse: return "empty-universe";
    case ErrorCode::DuplicateName: return "duplicate-name";
    case ErrorCode::InvalidName: return "invalid-name";
    case ErrorCode::NotDouble: return "not-double";
    case ErrorCode::UniverseMismatch: return "universe-mismatch";
    case ErrorCode::EmptyFamily: return "empty-family";
    case ErrorCode::UnknownObject: return "unknown-object";
    case ErrorCode::ReflexivePair: return "reflexive-pair";
    case ErrorCode::OverlappingKinds: return "overlapping-kinds";
    case ErrorCode::DominanceNotStrictOrder: return "dominance-not-strict-order";
    case ErrorCode::InputNotDisc: return "input-not-disc";
    case ErrorCode::UnknownAgent: return "unknown-agent";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::ValidationError: return "validation-error";
    case ErrorCode::UnboundName: return "unbound-name";
    case ErrorCode::ResolutionFailed: return "resolution-failed";
    case ErrorCode::UniverseTooLarge: return "universe-too-large";
    case ErrorCode::UnknownFixture: return "unknown-fixture";
    case ErrorCode::UnknownLaw: return "unknown-law";
  }
  return "unknown";
}

}  // namespace negset
