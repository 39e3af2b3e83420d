#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace projflow {

enum class Errc {
  NotHomogeneous,
  ZeroDenominator,
  SingularMatrix,
  NotZeroHomogeneous,
  IrrationalRoots,
  ZeroDirection,
  DivisionByZeroLeading,
  NonInvertibleLeading,
  OrderTooLow,
  SizeExceeded,
  WrongRootConfiguration,
  DegenerateField,
  InvalidExponents,
  HomogeneityMismatch,
  FewerThanThreeRoots,
  NotReducibleToBC,
  DegenerateProduct,
  UnsupportedShape,
  ForbiddenQ,
  UnsolvableConstantTerm,
  NewtonDivergence,
  BranchAmbiguity,
  DomainError,
  PoleOnPath,
  RootFindFailure,
  EvaluationFailure,
  BranchEscape,
  ParseError,
};

const char* to_string(Errc code) noexcept;

/// Every failure raised by the library. `subject` names the offending
/// component or input and `value` carries a numeric detail when one exists
/// (for NotHomogeneous: the degree found).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail, std::string subject = {},
        std::optional<long> value = std::nullopt);

  Errc code() const noexcept { return code_; }
  const std::string& subject() const noexcept { return subject_; }
  std::optional<long> value() const noexcept { return value_; }

 private:
  Errc code_;
  std::string subject_;
  std::optional<long> value_;
};

[[noreturn]] void raise(Errc code, const std::string& detail);

}  // namespace projflow
