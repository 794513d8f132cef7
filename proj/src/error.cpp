#include "unilat/error.hpp"

namespace unilat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::NotAPoset: return "NotAPoset";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NoBounds: return "NoBounds";
    case ErrorCode::EmptyBounds: return "EmptyBounds";
    case ErrorCode::CarrierNotClosed: return "CarrierNotClosed";
    case ErrorCode::CarrierMismatch: return "CarrierMismatch";
    case ErrorCode::InvalidNeutral: return "InvalidNeutral";
    case ErrorCode::MissingComponent: return "MissingComponent";
    case ErrorCode::ComponentNotTnorm: return "ComponentNotTnorm";
    case ErrorCode::ComponentNotConorm: return "ComponentNotConorm";
    case ErrorCode::ComponentNotSubnorm: return "ComponentNotSubnorm";
    case ErrorCode::ComponentNotSubconorm: return "ComponentNotSubconorm";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::RegionGap: return "RegionGap";
    case ErrorCode::RegionOverlap: return "RegionOverlap";
    case ErrorCode::BadChain: return "BadChain";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::RetriesExhausted: return "RetriesExhausted";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace unilat
