#include "posetgor/error.hpp"

namespace posetgor {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::UnknownElementInCover: return "UnknownElementInCover";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::NotAChain: return "NotAChain";
    case ErrorKind::IsAntichain: return "IsAntichain";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::NotInG: return "NotInG";
    case ErrorKind::NotInS0: return "NotInS0";
    case ErrorKind::NotInT0: return "NotInT0";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::EmptyPoset: return "EmptyPoset";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::BoxTooLarge: return "BoxTooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

}  // namespace posetgor
