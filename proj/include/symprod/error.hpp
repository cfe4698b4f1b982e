#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symprod {

enum class Errc {
  InvalidInput,
  NotHermitian,
  NotUnitary,
  NoConvergence,
  NotASymmetry,
  SplitMismatch,
  NonIntegerTrace,
  SymmetrizationFailed,
  NotSym2,
  ConditionPViolated,
  ResidualTooLarge,
  NotPrime,
  DeterminantNotReal,
  WrongEigenvalueCount,
  TooManyEigenvalues,
  HypothesisFailed,
  InternalConsistency,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NotUnitary: return "NotUnitary";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::NotASymmetry: return "NotASymmetry";
    case Errc::SplitMismatch: return "SplitMismatch";
    case Errc::NonIntegerTrace: return "NonIntegerTrace";
    case Errc::SymmetrizationFailed: return "SymmetrizationFailed";
    case Errc::NotSym2: return "NotSym2";
    case Errc::ConditionPViolated: return "ConditionPViolated";
    case Errc::ResidualTooLarge: return "ResidualTooLarge";
    case Errc::NotPrime: return "NotPrime";
    case Errc::DeterminantNotReal: return "DeterminantNotReal";
    case Errc::WrongEigenvalueCount: return "WrongEigenvalueCount";
    case Errc::TooManyEigenvalues: return "TooManyEigenvalues";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::InternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this exception; `code()`
/// identifies the condition, `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace symprod
