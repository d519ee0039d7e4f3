#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bessel_radii {

enum class ErrorCode {
  DomainCapExceeded,
  NonConvergence,
  ZeroArgument,
  InvalidOrder,
  ScanExhausted,
  OutOfInterval,
  NearPole,
  BracketFailure,
  PreconditionViolated,
  CapExceeded,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DomainCapExceeded: return "DomainCapExceeded";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::ScanExhausted: return "ScanExhausted";
    case ErrorCode::OutOfInterval: return "OutOfInterval";
    case ErrorCode::NearPole: return "NearPole";
    case ErrorCode::BracketFailure: return "BracketFailure";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::CapExceeded: return "CapExceeded";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bessel_radii
