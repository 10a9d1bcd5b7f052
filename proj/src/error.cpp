#include "brauer/error.hpp"

namespace brauer {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroDelta: return "ZeroDelta";
    case ErrorCode::NotSubpartition: return "NotSubpartition";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::NotInDominantChamber: return "NotInDominantChamber";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::DifferentFacet: return "DifferentFacet";
    case ErrorCode::TooSingular: return "TooSingular";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotInOrbit: return "NotInOrbit";
    case ErrorCode::NoDescent: return "NoDescent";
    case ErrorCode::DifferentBlocks: return "DifferentBlocks";
    case ErrorCode::WrongOrbit: return "WrongOrbit";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace brauer
