#pragma once

#include <stdexcept>
#include <string>

namespace conebal {

// Base class for all pipeline failures. `code()` is a stable machine-readable
// identifier used in error reports; `what()` carries the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define CONEBAL_DEFINE_ERROR(NAME, CODE)                       \
  class NAME : public Error {                                  \
   public:                                                     \
    explicit NAME(const std::string& message)                  \
        : Error(CODE, message) {}                              \
  }

// curve_model
CONEBAL_DEFINE_ERROR(InvalidSpecError, "InvalidSpec");
CONEBAL_DEFINE_ERROR(MixedSignError, "MixedSign");
CONEBAL_DEFINE_ERROR(NearDegenerateError, "NearDegenerate");
CONEBAL_DEFINE_ERROR(NonMonotoneError, "NonMonotone");

// wilczynski
CONEBAL_DEFINE_ERROR(IllConditionedError, "IllConditioned");
CONEBAL_DEFINE_ERROR(GaugeViolationError, "GaugeViolation");
CONEBAL_DEFINE_ERROR(ClosureDefectError, "ClosureDefect");
CONEBAL_DEFINE_ERROR(NegativePairingError, "NegativePairing");

// reduced_monodromy
CONEBAL_DEFINE_ERROR(StepFailureError, "StepFailure");
CONEBAL_DEFINE_ERROR(TheoremViolationError, "TheoremViolation");
CONEBAL_DEFINE_ERROR(OrthantViolationError, "OrthantViolation");

// balancer
CONEBAL_DEFINE_ERROR(InversionFailureError, "InversionFailure");
CONEBAL_DEFINE_ERROR(NotAQuadricError, "NotAQuadric");
CONEBAL_DEFINE_ERROR(WrongSignatureError, "WrongSignature");
CONEBAL_DEFINE_ERROR(VerificationFailureError, "VerificationFailure");

// analysis
CONEBAL_DEFINE_ERROR(FlatBetaError, "FlatBeta");

#undef CONEBAL_DEFINE_ERROR

}  // namespace conebal
