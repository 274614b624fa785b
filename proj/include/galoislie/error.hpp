#ifndef GALOISLIE_ERROR_HPP
#define GALOISLIE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace galoislie {

enum class ErrorKind {
  Parse,
  NonRoot,
  NotClosed,
  Degenerate,
  Reducible,
  DivisionByZero,
  TowerMismatch,
  NotGalois,
  DegreeTooLarge,
  JacobiFailure,
  OwnerMismatch,
  FieldMismatch,
  IndexRange,
  NotSubLevel,
  NotSuperLevel,
  SingularMatrix,
  NotTwoStep,
  NotSkew,
  OddP,
  WrongShape,
  TVanishes,
  ZeroScalar,
  ZeroLambda,
  ZeroAlpha,
  ConstraintViolated,
  UncertifiedDecomposition,
  OracleUndecided,
  UnknownName,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above, so
/// callers (the CLI in particular) can map it onto a verdict.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace galoislie

#endif
