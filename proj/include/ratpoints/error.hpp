#pragma once

#include <stdexcept>
#include <string>

namespace ratpoints {

enum class Errc {
  ZeroPolynomial,
  DegreeZero,
  ParseError,
  InvalidArgument,
  NotIrreducible,
  Inconclusive,
  GenusUnavailable,
  VerticalComponent,
  NotZeroDimensional,
  DuplicateExcisionValue,
  BudgetExhausted,
  DegenerateElimination,
  CertificateViolation,
  NoRationalPreimage,
  NotOnCurve,
  WitnessMismatch,
  DuplicateKey,
  BaseNotOnConic,
  SingularCubic,
  Unsupported,
  UnsupportedShape,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Thrown by the polynomial parser; `position` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(Errc::ParseError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ratpoints
