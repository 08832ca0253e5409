#ifndef LIEMETRIC_ERRORS_HPP
#define LIEMETRIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liemetric {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LIEMETRIC_DEFINE_ERROR(Name)            \
  class Name : public Error {                   \
   public:                                      \
    explicit Name(const std::string& what)      \
        : Error(std::string(#Name ": ") + what) {} \
  }

LIEMETRIC_DEFINE_ERROR(DimensionMismatch);
LIEMETRIC_DEFINE_ERROR(LinearDependence);
LIEMETRIC_DEFINE_ERROR(NotClosed);
LIEMETRIC_DEFINE_ERROR(UnknownName);
LIEMETRIC_DEFINE_ERROR(MissingRep);
LIEMETRIC_DEFINE_ERROR(SingularMatrix);
LIEMETRIC_DEFINE_ERROR(ZeroFiberPoint);
LIEMETRIC_DEFINE_ERROR(AsymmetricInput);
LIEMETRIC_DEFINE_ERROR(BadAlgebra);
LIEMETRIC_DEFINE_ERROR(ZeroFinslerNorm);
LIEMETRIC_DEFINE_ERROR(ZeroVelocity);
LIEMETRIC_DEFINE_ERROR(ParseError);
LIEMETRIC_DEFINE_ERROR(InvalidArgument);
LIEMETRIC_DEFINE_ERROR(UnknownCommand);

#undef LIEMETRIC_DEFINE_ERROR

}  // namespace liemetric

#endif  // LIEMETRIC_ERRORS_HPP
