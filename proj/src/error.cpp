#include "ratpoints/error.hpp"

namespace ratpoints {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::Inconclusive: return "Inconclusive";
    case Errc::GenusUnavailable: return "GenusUnavailable";
    case Errc::VerticalComponent: return "VerticalComponent";
    case Errc::NotZeroDimensional: return "NotZeroDimensional";
    case Errc::DuplicateExcisionValue: return "DuplicateExcisionValue";
    case Errc::BudgetExhausted: return "BudgetExhausted";
    case Errc::DegenerateElimination: return "DegenerateElimination";
    case Errc::CertificateViolation: return "CertificateViolation";
    case Errc::NoRationalPreimage: return "NoRationalPreimage";
    case Errc::NotOnCurve: return "NotOnCurve";
    case Errc::WitnessMismatch: return "WitnessMismatch";
    case Errc::DuplicateKey: return "DuplicateKey";
    case Errc::BaseNotOnConic: return "BaseNotOnConic";
    case Errc::SingularCubic: return "SingularCubic";
    case Errc::Unsupported: return "Unsupported";
    case Errc::UnsupportedShape: return "UnsupportedShape";
  }
  return "Error";
}

}  // namespace ratpoints
