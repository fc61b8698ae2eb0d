#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricsegre {

/// Stable diagnostic classes. The numeric values are the CLI exit codes and
/// must not be renumbered.
enum class ErrorCode : int {
  Usage = 2,
  Io = 3,

  Syntax = 10,
  UnknownVariable = 11,
  NotHomogeneous = 12,
  ZeroPolynomial = 13,
  EmptyDegree = 14,
  InvalidInput = 15,

  NotSmooth = 20,
  NotComplete = 21,
  NoPositiveGrading = 22,
  NotProjective = 23,
  InvalidDegrees = 24,

  EmptySubscheme = 30,
  WholeSpace = 31,
  NotZeroDimensional = 32,

  DimensionFailure = 40,
  InconsistentSystem = 41,
  NonIntegerSolution = 42,
  RetriesExhausted = 43,

  // Internal-consistency failures; seeing one of these means a bug.
  RankMismatch = 50,
  NonIntegerCoefficient = 51,
  NormalizationInconsistent = 52,
  NoIntegerLift = 53,
  Internal = 59,
};

inline std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Usage: return "Usage";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Syntax: return "Syntax";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::EmptyDegree: return "EmptyDegree";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotSmooth: return "NotSmooth";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::NoPositiveGrading: return "NoPositiveGrading";
    case ErrorCode::NotProjective: return "NotProjective";
    case ErrorCode::InvalidDegrees: return "InvalidDegrees";
    case ErrorCode::EmptySubscheme: return "EmptySubscheme";
    case ErrorCode::WholeSpace: return "WholeSpace";
    case ErrorCode::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorCode::DimensionFailure: return "DimensionFailure";
    case ErrorCode::InconsistentSystem: return "InconsistentSystem";
    case ErrorCode::NonIntegerSolution: return "NonIntegerSolution";
    case ErrorCode::RetriesExhausted: return "RetriesExhausted";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NonIntegerCoefficient: return "NonIntegerCoefficient";
    case ErrorCode::NormalizationInconsistent: return "NormalizationInconsistent";
    case ErrorCode::NoIntegerLift: return "NoIntegerLift";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

/// Exception carrying a stable code plus a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Failures caused by an unlucky random draw; the caller may resample.
inline bool is_resample_failure(ErrorCode code) {
  return code == ErrorCode::DimensionFailure || code == ErrorCode::InconsistentSystem ||
         code == ErrorCode::NonIntegerSolution;
}

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace toricsegre
