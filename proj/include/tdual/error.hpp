#pragma once

#include <stdexcept>
#include <string>

namespace tdual {

enum class ErrorCode {
  NoSolution,
  CompositionNotZero,
  InvalidComplex,
  InvalidLocalSystem,
  BaseMismatch,
  NotACocycle,
  InvalidDescriptor,
  BundleMismatch,
  SpaceMismatch,
  InternalObstruction,
  DimensionTooHigh,
  NoMatchingCandidate,
  MultipleMatches,
  InvalidXi,
  JOutOfRange,
  KOutOfRange,
  InvalidContext,
  ParseError,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::CompositionNotZero: return "CompositionNotZero";
    case ErrorCode::InvalidComplex: return "InvalidComplex";
    case ErrorCode::InvalidLocalSystem: return "InvalidLocalSystem";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorCode::BundleMismatch: return "BundleMismatch";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::InternalObstruction: return "InternalObstruction";
    case ErrorCode::DimensionTooHigh: return "DimensionTooHigh";
    case ErrorCode::NoMatchingCandidate: return "NoMatchingCandidate";
    case ErrorCode::MultipleMatches: return "MultipleMatches";
    case ErrorCode::InvalidXi: return "InvalidXi";
    case ErrorCode::JOutOfRange: return "JOutOfRange";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::InvalidContext: return "InvalidContext";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Exception carrying a machine-checkable error kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tdual
