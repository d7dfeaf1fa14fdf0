#pragma once

#include <stdexcept>
#include <string>

namespace qsg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QSG_ERROR(Name)                          \
  class Name : public Error {                    \
   public:                                       \
    explicit Name(const std::string& what)       \
        : Error(std::string(#Name ": ") + what) {} \
  };

QSG_ERROR(NotDivisible)
QSG_ERROR(ParseError)
QSG_ERROR(GradeMismatch)
QSG_ERROR(NotTelescoping)
QSG_ERROR(NotInvertibleLeadingTerm)
QSG_ERROR(StabilizationFailure)
QSG_ERROR(NonzeroDiagonalRemainder)
QSG_ERROR(SingularSystem)
QSG_ERROR(Inconsistent)
QSG_ERROR(OutOfTruncation)
QSG_ERROR(CrossCheckMismatch)
QSG_ERROR(ConfigError)
QSG_ERROR(IoError)
QSG_ERROR(VersionMismatch)

#undef QSG_ERROR

}  // namespace qsg
