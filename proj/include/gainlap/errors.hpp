#pragma once

#include <stdexcept>
#include <string>

namespace gainlap {

enum class ErrorCode {
  ZeroGain,
  NotAWalk,
  NotACycle,
  InvalidGraph,
  Disconnected,
  PathExplosion,
  TooLarge,
  NotHermitian,
  DimensionMismatch,
  ParseError,
  ValidationError,
};

const char* to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map it onto an exit status.
class GainError : public std::runtime_error {
 public:
  GainError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gainlap
