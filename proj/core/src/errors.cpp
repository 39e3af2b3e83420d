#include "projflow/errors.hpp"

#include <utility>

namespace projflow {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::NotZeroHomogeneous: return "NotZeroHomogeneous";
    case Errc::IrrationalRoots: return "IrrationalRoots";
    case Errc::ZeroDirection: return "ZeroDirection";
    case Errc::DivisionByZeroLeading: return "DivisionByZeroLeading";
    case Errc::NonInvertibleLeading: return "NonInvertibleLeading";
    case Errc::OrderTooLow: return "OrderTooLow";
    case Errc::SizeExceeded: return "SizeExceeded";
    case Errc::WrongRootConfiguration: return "WrongRootConfiguration";
    case Errc::DegenerateField: return "DegenerateField";
    case Errc::InvalidExponents: return "InvalidExponents";
    case Errc::HomogeneityMismatch: return "HomogeneityMismatch";
    case Errc::FewerThanThreeRoots: return "FewerThanThreeRoots";
    case Errc::NotReducibleToBC: return "NotReducibleToBC";
    case Errc::DegenerateProduct: return "DegenerateProduct";
    case Errc::UnsupportedShape: return "UnsupportedShape";
    case Errc::ForbiddenQ: return "ForbiddenQ";
    case Errc::UnsolvableConstantTerm: return "UnsolvableConstantTerm";
    case Errc::NewtonDivergence: return "NewtonDivergence";
    case Errc::BranchAmbiguity: return "BranchAmbiguity";
    case Errc::DomainError: return "DomainError";
    case Errc::PoleOnPath: return "PoleOnPath";
    case Errc::RootFindFailure: return "RootFindFailure";
    case Errc::EvaluationFailure: return "EvaluationFailure";
    case Errc::BranchEscape: return "BranchEscape";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail, std::string subject,
             std::optional<long> value)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code),
      subject_(std::move(subject)),
      value_(value) {}

void raise(Errc code, const std::string& detail) { throw Error(code, detail); }

}  // namespace projflow
