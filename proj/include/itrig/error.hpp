#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace itrig {

enum class ErrorKind {
  NotInvertible,
  NotSquare,
  RankDeficient,
  NoSuchExpansion,
  ZeroVector,
  DegenerateSegment,
  Collinear,
  Degenerate,
  DegenerateCone,
  IndexOutOfRange,
  DimensionMismatch,
  TrivialAngle,
  StraightAngle,
  NonPositive,
  NonPositiveTangent,
  NoReduction,
  BranchAmbiguity,
  SizeMismatch,
  NotSimple,
  CosineNotInvertible,
  NotACycle,
  NonUnitEdgeLengths,
  ZeroCosine,
  CosineTooSmall,
  TooSmall,
  ParseError,
  SearchBoundExceeded,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::NoSuchExpansion: return "NoSuchExpansion";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::DegenerateSegment: return "DegenerateSegment";
    case ErrorKind::Collinear: return "Collinear";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::DegenerateCone: return "DegenerateCone";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::TrivialAngle: return "TrivialAngle";
    case ErrorKind::StraightAngle: return "StraightAngle";
    case ErrorKind::NonPositive: return "NonPositive";
    case ErrorKind::NonPositiveTangent: return "NonPositiveTangent";
    case ErrorKind::NoReduction: return "NoReduction";
    case ErrorKind::BranchAmbiguity: return "BranchAmbiguity";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::CosineNotInvertible: return "CosineNotInvertible";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::NonUnitEdgeLengths: return "NonUnitEdgeLengths";
    case ErrorKind::ZeroCosine: return "ZeroCosine";
    case ErrorKind::CosineTooSmall: return "CosineTooSmall";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SearchBoundExceeded: return "SearchBoundExceeded";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace itrig
