#include "bayesbounds/error.hpp"

namespace bayesbounds {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNegativeEntry: return "NegativeEntry";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kMassNotOne: return "MassNotOne";
    case ErrorCode::kTooFewClasses: return "TooFewClasses";
    case ErrorCode::kBadShape: return "BadShape";
    case ErrorCode::kZeroMarginal: return "ZeroMarginal";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kBadLabel: return "BadLabel";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kEntropyOutOfRange: return "EntropyOutOfRange";
    case ErrorCode::kNegativeEntropy: return "NegativeEntropy";
    case ErrorCode::kBadBeta: return "BadBeta";
    case ErrorCode::kBadWeights: return "BadWeights";
    case ErrorCode::kBadPermutation: return "BadPermutation";
    case ErrorCode::kBadParam: return "BadParam";
    case ErrorCode::kOutOfDomain: return "OutOfDomain";
    case ErrorCode::kCheckFailed: return "CheckFailed";
  }
  return "Unknown";
}

}  // namespace bayesbounds
