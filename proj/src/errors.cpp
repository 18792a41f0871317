#include "omegagraph/errors.hpp"

#include <sstream>

namespace omegagraph {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::StripStripEdge: return "StripStripEdge";
    case ErrorKind::DanglingReference: return "DanglingReference";
    case ErrorKind::DisconnectedPeriodChain: return "DisconnectedPeriodChain";
    case ErrorKind::AttachmentNotCovered: return "AttachmentNotCovered";
    case ErrorKind::NameCollision: return "NameCollision";
    case ErrorKind::DisconnectedTemplate: return "DisconnectedTemplate";
    case ErrorKind::UnsupportedEdge: return "UnsupportedEdge";
    case ErrorKind::MalformedSpec: return "MalformedSpec";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::NotASubset: return "NotASubset";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::UnknownComponent: return "UnknownComponent";
    case ErrorKind::NotCritical: return "NotCritical";
    case ErrorKind::YContainedInX: return "YContainedInX";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::NotAStar: return "NotAStar";
    case ErrorKind::NotTame: return "NotTame";
    case ErrorKind::NotFinite: return "NotFinite";
    case ErrorKind::DuplicateSeparation: return "DuplicateSeparation";
    case ErrorKind::PointsEqual: return "PointsEqual";
    case ErrorKind::NotFoundWithinHorizon: return "NotFoundWithinHorizon";
    case ErrorKind::NotDirected: return "NotDirected";
    case ErrorKind::Condition4Violated: return "Condition4Violated";
    case ErrorKind::InvalidEmbedding: return "InvalidEmbedding";
    case ErrorKind::InvalidMap: return "InvalidMap";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantFailure: return "InvariantFailure";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(std::move(detail)) {}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::ostringstream out;
  out << violations.size() << " violation(s)";
  for (const auto& v : violations) {
    out << "; " << to_string(v.kind) << " at " << v.element << ": " << v.message;
  }
  return out.str();
}

ErrorKind first_kind(const std::vector<Violation>& violations) {
  return violations.empty() ? ErrorKind::MalformedSpec : violations.front().kind;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(first_kind(violations), summarize(violations)), violations_(std::move(violations)) {}

}  // namespace omegagraph
