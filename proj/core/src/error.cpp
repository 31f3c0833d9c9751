#include "slr/error.hpp"

namespace slr {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidMeasure: return "InvalidMeasure";
    case ErrorKind::DivergentAtOrigin: return "DivergentAtOrigin";
    case ErrorKind::NonIntegrable: return "NonIntegrable";
    case ErrorKind::PoleOnSupport: return "PoleOnSupport";
    case ErrorKind::NotSL0: return "NotSL0";
    case ErrorKind::OdeStepFailure: return "OdeStepFailure";
    case ErrorKind::TruncationDominates: return "TruncationDominates";
    case ErrorKind::NodeAtEndpoint: return "NodeAtEndpoint";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DegenerateImaginaryPart: return "DegenerateImaginaryPart";
    case ErrorKind::MissingXi: return "MissingXi";
    case ErrorKind::ThetaMismatch: return "ThetaMismatch";
    case ErrorKind::PoleOfW: return "PoleOfW";
    case ErrorKind::PoleOfV: return "PoleOfV";
    case ErrorKind::CayleyPole: return "CayleyPole";
    case ErrorKind::SideConditionViolated: return "SideConditionViolated";
  }
  return "Unknown";
}

bool is_numerical_failure(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::OdeStepFailure:
    case ErrorKind::TruncationDominates:
    case ErrorKind::NodeAtEndpoint:
    case ErrorKind::NonConvergent:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorKind kind, std::string_view module, const std::string& detail)
    : std::runtime_error("[" + std::string(module) + "] " + std::string(to_string(kind)) + ": " +
                         detail),
      kind_(kind),
      module_(module) {}

}  // namespace slr
