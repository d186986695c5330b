#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bayesbounds {

enum class ErrorCode {
  kNegativeEntry,
  kNonFinite,
  kMassNotOne,
  kTooFewClasses,
  kBadShape,
  kZeroMarginal,
  kParseError,
  kIoError,
  kLengthMismatch,
  kBadLabel,
  kTooLarge,
  kOutOfRange,
  kEntropyOutOfRange,
  kNegativeEntropy,
  kBadBeta,
  kBadWeights,
  kBadPermutation,
  kBadParam,
  kOutOfDomain,
  kCheckFailed,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library is reported through this exception; callers
// branch on code() rather than on the message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bayesbounds
