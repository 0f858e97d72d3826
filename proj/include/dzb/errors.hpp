#pragma once

#include <stdexcept>
#include <string>

namespace dzb {

// Exit-code class used by the command line front end.
enum class ErrorClass { Input = 1, Guard = 2, Invariant = 3 };

class Error : public std::runtime_error {
public:
  Error(ErrorClass cls, std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), cls_(cls), name_(std::move(name)) {}
  ErrorClass error_class() const noexcept { return cls_; }
  const std::string& name() const noexcept { return name_; }

private:
  ErrorClass cls_;
  std::string name_;
};

#define DZB_ERROR(Name, Cls)                                                   \
  struct Name : Error {                                                        \
    explicit Name(const std::string& what) : Error(ErrorClass::Cls, #Name, what) {} \
  };

DZB_ERROR(ParseError, Input)
DZB_ERROR(InvalidInput, Input)
DZB_ERROR(InvalidCharacter, Input)
DZB_ERROR(BadPrimePower, Input)
DZB_ERROR(MismatchedBase, Input)
DZB_ERROR(AlgebraMismatch, Input)
DZB_ERROR(NotAPower, Input)
DZB_ERROR(UnrecognizedRankOneKind, Input)
DZB_ERROR(InfiniteIndexCenter, Input)
DZB_ERROR(GroupTooLarge, Guard)
DZB_ERROR(OracleTooLarge, Guard)
DZB_ERROR(LengthGuard, Guard)
DZB_ERROR(InvariantViolation, Invariant)
DZB_ERROR(DecompositionFailure, Invariant)
DZB_ERROR(NonInjective, Invariant)
DZB_ERROR(NonRationalStructureConstants, Invariant)
DZB_ERROR(NoAdmissibleRoot, Invariant)
DZB_ERROR(NoConvergence, Invariant)
DZB_ERROR(ArithmeticOverflow, Invariant)

#undef DZB_ERROR

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation(what);
}

}  // namespace dzb
