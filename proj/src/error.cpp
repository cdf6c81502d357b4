#include "hemforce/error.hpp"

namespace hemforce {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NegativeForce: return "NegativeForce";
    case ErrorCode::NegativeTorque: return "NegativeTorque";
    case ErrorCode::NegativeLength: return "NegativeLength";
    case ErrorCode::NegativeMass: return "NegativeMass";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::NegativeOffset: return "NegativeOffset";
    case ErrorCode::NonPositiveRadius: return "NonPositiveRadius";
    case ErrorCode::NonPositiveDiameter: return "NonPositiveDiameter";
    case ErrorCode::OffsetExceedsRadius: return "OffsetExceedsRadius";
    case ErrorCode::GradientOutOfRange: return "GradientOutOfRange";
    case ErrorCode::PressureAngleOutOfRange: return "PressureAngleOutOfRange";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::NonMonotoneTime: return "NonMonotoneTime";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::BadSampleCount: return "BadSampleCount";
    case ErrorCode::SafetyFactorBelowOne: return "SafetyFactorBelowOne";
    case ErrorCode::EmptyCandidates: return "EmptyCandidates";
    case ErrorCode::BadCycleCount: return "BadCycleCount";
    case ErrorCode::BadAdvance: return "BadAdvance";
    case ErrorCode::SeriesEmpty: return "SeriesEmpty";
    case ErrorCode::EmptyList: return "EmptyList";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace hemforce
