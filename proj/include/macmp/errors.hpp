#pragma once

#include <stdexcept>
#include <string>

namespace macmp {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Usage-level errors: bad input from the caller.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Violated internal invariants. These indicate a bug, never bad input.
class InternalAssertion : public Error {
 public:
  using Error::Error;
};

#define MACMP_DEFINE_ERROR(Name, Base)       \
  class Name : public Base {                 \
   public:                                   \
    explicit Name(const std::string& what)   \
        : Base(#Name ": " + what) {}         \
  };

MACMP_DEFINE_ERROR(DivisionByZero, UsageError)
MACMP_DEFINE_ERROR(SpecializationPole, UsageError)
MACMP_DEFINE_ERROR(IndexOutOfRange, UsageError)
MACMP_DEFINE_ERROR(LengthMismatch, UsageError)
MACMP_DEFINE_ERROR(DivergentTrace, UsageError)
MACMP_DEFINE_ERROR(NotDyck, UsageError)
MACMP_DEFINE_ERROR(CutoffTooSmall, UsageError)
MACMP_DEFINE_ERROR(NotRaisable, UsageError)
MACMP_DEFINE_ERROR(NotAPartition, UsageError)
MACMP_DEFINE_ERROR(ParseError, UsageError)
MACMP_DEFINE_ERROR(ReducibleChain, UsageError)
MACMP_DEFINE_ERROR(NoSolution, Error)
MACMP_DEFINE_ERROR(NonUnique, Error)

MACMP_DEFINE_ERROR(InternalNonDivisibility, InternalAssertion)
MACMP_DEFINE_ERROR(InternalNonPolynomial, InternalAssertion)
MACMP_DEFINE_ERROR(BranchResolutionFailure, InternalAssertion)
MACMP_DEFINE_ERROR(SingularSystem, InternalAssertion)

#undef MACMP_DEFINE_ERROR

}  // namespace macmp
