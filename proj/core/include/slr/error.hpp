#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slr {

enum class ErrorKind {
  InvalidArgument,
  InvalidMeasure,
  DivergentAtOrigin,
  NonIntegrable,
  PoleOnSupport,
  NotSL0,
  OdeStepFailure,
  TruncationDominates,
  NodeAtEndpoint,
  NonConvergent,
  Unsupported,
  OutOfRange,
  DegenerateImaginaryPart,
  MissingXi,
  ThetaMismatch,
  PoleOfW,
  PoleOfV,
  CayleyPole,
  SideConditionViolated,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// True for failures of a numerical procedure (as opposed to bad input).
bool is_numerical_failure(ErrorKind kind) noexcept;

/// Every failure raised by the library. The message names the module and
/// the violated invariant: "[weyl] NodeAtEndpoint: |y(a)| = ... < ode_tol".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string_view module, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& module() const noexcept { return module_; }

 private:
  ErrorKind kind_;
  std::string module_;
};

}  // namespace slr
