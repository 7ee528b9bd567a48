#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gkp {

enum class Errc {
  NotTypeI,
  NotTypeIV,
  IndexOutOfRange,
  DivByNonUnit,
  BadConstantTerm,
  NotReversible,
  NotApplicable,
  CaseMismatch,
  DomainError,
  IrrationalConstant,
  PrecisionLoss,
  NotDegenerate,
  MalformedLine,
  NonConsecutiveIndex,
  NotInFixtures,
  NetworkError,
  MalformedResponse,
  Infeasible,
  PrefixTooShallow,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// All library failures are reported through this exception; `code()`
/// identifies the failure class.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gkp
