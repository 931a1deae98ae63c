#pragma once

#include <stdexcept>
#include <string>

namespace orbicurve {

/// Base class for every domain error raised by the library. The CLI maps
/// all of these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ORBICURVE_DEFINE_ERROR(Name)            \
  class Name : public Error {                   \
   public:                                      \
    using Error::Error;                         \
  }

ORBICURVE_DEFINE_ERROR(MalformedSignature);
ORBICURVE_DEFINE_ERROR(UnknownGenerator);
ORBICURVE_DEFINE_ERROR(ParseError);
ORBICURVE_DEFINE_ERROR(ArityMismatch);
ORBICURVE_DEFINE_ERROR(IncompleteTable);
ORBICURVE_DEFINE_ERROR(NonIntegralRank);
ORBICURVE_DEFINE_ERROR(LcmNotDividing);
ORBICURVE_DEFINE_ERROR(NotOpenGroup);
ORBICURVE_DEFINE_ERROR(UnsupportedKind);
ORBICURVE_DEFINE_ERROR(BadK);
ORBICURVE_DEFINE_ERROR(UnknownExample);
ORBICURVE_DEFINE_ERROR(BadParameters);
ORBICURVE_DEFINE_ERROR(NotHyperbolic);
ORBICURVE_DEFINE_ERROR(InvalidPermutation);

#undef ORBICURVE_DEFINE_ERROR

}  // namespace orbicurve
