#pragma once

#include <stdexcept>
#include <string>

namespace coxplane {

// Base of everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: unknown type labels, out-of-range generators, exhausted budgets.
class UsageError : public Error {
 public:
  using Error::Error;
};

class UnknownType : public UsageError {
 public:
  using UsageError::UsageError;
};

class IndexOutOfRange : public UsageError {
 public:
  using UsageError::UsageError;
};

class BudgetExceeded : public UsageError {
 public:
  using UsageError::UsageError;
};

class IOError : public Error {
 public:
  using Error::Error;
};

// A broken internal invariant. None of these can be triggered by valid
// input; seeing one means a construction step is wrong.
class InternalError : public Error {
 public:
  using Error::Error;
};

#define COXPLANE_INTERNAL_ERROR(Name)   \
  class Name : public InternalError {   \
   public:                              \
    using InternalError::InternalError; \
  }

COXPLANE_INTERNAL_ERROR(NonFiniteSystem);
COXPLANE_INTERNAL_ERROR(EigenbasisDegenerate);
COXPLANE_INTERNAL_ERROR(SnapFailure);
COXPLANE_INTERNAL_ERROR(DegenerateSegment);
COXPLANE_INTERNAL_ERROR(RootEscaped);
COXPLANE_INTERNAL_ERROR(NoNegativeSimpleReached);
COXPLANE_INTERNAL_ERROR(DistinguishedEdgeCountError);
COXPLANE_INTERNAL_ERROR(AxisNotFound);
COXPLANE_INTERNAL_ERROR(AxisNotUnique);
COXPLANE_INTERNAL_ERROR(InconsistentPropagation);

#undef COXPLANE_INTERNAL_ERROR

}  // namespace coxplane
