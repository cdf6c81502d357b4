#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hemforce {

enum class ErrorCode {
  NonFinite,
  NegativeForce,
  NegativeTorque,
  NegativeLength,
  NegativeMass,
  NegativeCoefficient,
  NegativeOffset,
  NonPositiveRadius,
  NonPositiveDiameter,
  OffsetExceedsRadius,
  GradientOutOfRange,
  PressureAngleOutOfRange,
  EmptyInput,
  MalformedRow,
  NonMonotoneTime,
  TooFewSamples,
  BadSampleCount,
  SafetyFactorBelowOne,
  EmptyCandidates,
  BadCycleCount,
  BadAdvance,
  SeriesEmpty,
  EmptyList,
  InvalidConfig,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every operation in the toolkit reports rejected input through this type.
/// The message carries context (field path, CSV line) and the code is stable
/// for programmatic matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hemforce
