#pragma once

#include <stdexcept>
#include <string>

namespace resupal {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define RESUPAL_ERROR(Name)                                 \
  class Name : public Error {                               \
   public:                                                  \
    explicit Name(const std::string& what) : Error(what) {} \
  }

RESUPAL_ERROR(InvalidField);
RESUPAL_ERROR(MixedFields);
RESUPAL_ERROR(DivisionByZero);
RESUPAL_ERROR(DimensionMismatch);
RESUPAL_ERROR(UnknownName);
RESUPAL_ERROR(UnsupportedPair);
RESUPAL_ERROR(OddInput);
RESUPAL_ERROR(NotACocycle);
RESUPAL_ERROR(BaseMismatch);
RESUPAL_ERROR(NotCentral);
RESUPAL_ERROR(NotPClosed);
RESUPAL_ERROR(NoCenter);
RESUPAL_ERROR(BoundExceeded);
RESUPAL_ERROR(NotAutomorphism);
RESUPAL_ERROR(DegreeMismatch);
RESUPAL_ERROR(NotNilpotent);
RESUPAL_ERROR(ParseError);

#undef RESUPAL_ERROR

}  // namespace resupal
