#pragma once

#include <stdexcept>
#include <string>

namespace cremona {

/// Stable reason codes surfaced by the CLI and the JSON reports.
enum class ErrorCode {
  SyntaxError,
  NotHomogeneous,
  DegreeMismatch,
  DegreeTooLarge,
  ZeroPolynomial,
  CommonFactor,
  NotAPoint,
  NotIrreducible,
  IndeterminateAt,
  HintNotIndeterminate,
  HintNotExceptional,
  InvalidCenter,
  NotASubtower,
  SurfaceMismatch,
  NotAMorphism,
  NotUntangled,
  NoInverseDeclared,
  InverseMismatch,
  SamplingFailed,
  InterpolationUnverified,
  ResidualIndeterminacy,
  RoundCapExceeded,
  OrbitCapExceeded,
  JetCapExceeded,
  NoRealRoot,
  IoError,
  InternalError,
};

const char* error_code_name(ErrorCode c);

/// Domain error with a stable code; the CLI maps codes onto exit statuses.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what_arg)
      : std::runtime_error(what_arg), code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

// Internal invariant check; use for states that indicate a bug, not bad input.
inline void require_internal(bool ok, const char* msg) {
  if (!ok) throw Error(ErrorCode::InternalError, msg);
}

}  // namespace cremona
