#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace omegagraph {

enum class ErrorKind {
  // spec validation
  StripStripEdge,
  DanglingReference,
  DisconnectedPeriodChain,
  AttachmentNotCovered,
  NameCollision,
  DisconnectedTemplate,
  UnsupportedEdge,
  MalformedSpec,
  // queries
  UnknownVertex,
  NotASubset,
  NotNested,
  UnknownComponent,
  NotCritical,
  YContainedInX,
  BaseMismatch,
  NotAStar,
  NotTame,
  NotFinite,
  DuplicateSeparation,
  PointsEqual,
  NotFoundWithinHorizon,
  NotDirected,
  Condition4Violated,
  InvalidEmbedding,
  InvalidMap,
  ParseError,
  InvariantFailure,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

/// One broken invariant found while validating a graph spec.
struct Violation {
  ErrorKind kind;
  std::string element;  // offending element, e.g. "strip s1" or "fan f2"
  std::string message;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

}  // namespace omegagraph
