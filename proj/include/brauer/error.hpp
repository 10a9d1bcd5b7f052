#ifndef BRAUER_ERROR_HPP
#define BRAUER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace brauer {

enum class ErrorCode {
  ZeroDelta,
  NotSubpartition,
  ParityMismatch,
  NotInDominantChamber,
  NotAdjacent,
  DifferentFacet,
  TooSingular,
  NotRegular,
  NotInOrbit,
  NoDescent,
  DifferentBlocks,
  WrongOrbit,
  SizeMismatch,
  BadDegree,
  InvalidArgument,
  ParseError,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Every validation failure in the library is reported through this type;
/// the code lets callers (the CLI, the Python module) map failures without
/// parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline void require_nonzero_delta(long delta) {
  if (delta == 0) throw Error(ErrorCode::ZeroDelta, "delta must be non-zero");
}

}  // namespace brauer

#endif  // BRAUER_ERROR_HPP
