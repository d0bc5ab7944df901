#include "ghosa/error.hpp"

namespace ghosa {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidPosition: return "InvalidPosition";
    case ErrorCode::UnknownEvent: return "UnknownEvent";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::ShiftOutOfRange: return "ShiftOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidTour: return "InvalidTour";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::ThresholdOutOfRange: return "ThresholdOutOfRange";
    case ErrorCode::DisconnectedPath: return "DisconnectedPath";
    case ErrorCode::WrongEndpoints: return "WrongEndpoints";
    case ErrorCode::OutOfBounds: return "OutOfBounds";
    case ErrorCode::MissingHeaderField: return "MissingHeaderField";
    case ErrorCode::UnsupportedEdgeWeightType: return "UnsupportedEdgeWeightType";
    case ErrorCode::TruncatedMatrix: return "TruncatedMatrix";
    case ErrorCode::NonNumericToken: return "NonNumericToken";
    case ErrorCode::TruncatedSection: return "TruncatedSection";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::UnknownNodeReference: return "UnknownNodeReference";
    case ErrorCode::NonPositiveVelocity: return "NonPositiveVelocity";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

}  // namespace ghosa
