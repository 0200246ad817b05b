#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewpbw {

enum class Errc {
  ZeroPolynomial,
  InvalidGenerators,
  SyntaxError,
  UnknownGenerator,
  UnboundParameter,
  ZeroParameter,
  DegreeTooHigh,
  ZeroRelator,
  UnknownFixture,
  InvalidShape,
  UnitIdeal,
  BudgetExceeded,
  InsufficientCompletion,
  NotHomogeneousQuadratic,
  SizeCapExceeded,
  DependentQuadraticParts,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::InvalidGenerators: return "InvalidGenerators";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownGenerator: return "UnknownGenerator";
    case Errc::UnboundParameter: return "UnboundParameter";
    case Errc::ZeroParameter: return "ZeroParameter";
    case Errc::DegreeTooHigh: return "DegreeTooHigh";
    case Errc::ZeroRelator: return "ZeroRelator";
    case Errc::UnknownFixture: return "UnknownFixture";
    case Errc::InvalidShape: return "InvalidShape";
    case Errc::UnitIdeal: return "UnitIdeal";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::InsufficientCompletion: return "InsufficientCompletion";
    case Errc::NotHomogeneousQuadratic: return "NotHomogeneousQuadratic";
    case Errc::SizeCapExceeded: return "SizeCapExceeded";
    case Errc::DependentQuadraticParts: return "DependentQuadraticParts";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace skewpbw
