#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pathmorph {

/// Failure categories surfaced by the library. The CLI maps these to
/// diagnostics on stderr and exit code 2.
enum class Errc {
  InvalidLength,    // walk has no steps, or an odd number of them
  NonZeroStart,     // positions[0] != 0
  BadStep,          // |delta| != 1 somewhere, or a step value outside {-1,+1}
  OddLength,        // raw position list has even size (odd step count)
  SyntaxError,      // malformed tuple / JSON text
  NotInDomain,      // path fails the membership precondition of a map
  NTooSmall,        // operation undefined below a minimum half-length
  LimitExceeded,    // n above the exhaustive enumeration limit
  EmptyFamily,      // sampling from a family with no members
  LengthMismatch,   // paired paths of different length
  InvalidArgument,  // other precondition breach (n < 1, bad enum value, ...)
};

constexpr std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidLength: return "InvalidLength";
    case Errc::NonZeroStart: return "NonZeroStart";
    case Errc::BadStep: return "BadStep";
    case Errc::OddLength: return "OddLength";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::NotInDomain: return "NotInDomain";
    case Errc::NTooSmall: return "NTooSmall";
    case Errc::LimitExceeded: return "LimitExceeded";
    case Errc::EmptyFamily: return "EmptyFamily";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace pathmorph
