#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

// Base of every exception thrown by the library. Verification outcomes are
// reported through CheckReport; exceptions are reserved for misuse and for
// constructions that cannot proceed.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define HECKE_DECLARE_ERROR(Name)                                                  \
    class Name : public Error {                                                    \
    public:                                                                        \
        using Error::Error;                                                        \
    }

HECKE_DECLARE_ERROR(NotAUnit);
HECKE_DECLARE_ERROR(DimensionMismatch);
HECKE_DECLARE_ERROR(ConstraintViolation);
HECKE_DECLARE_ERROR(NotInvertible);
HECKE_DECLARE_ERROR(IndexOutOfRange);
HECKE_DECLARE_ERROR(CalibrationFailure);
HECKE_DECLARE_ERROR(ConditionFailure);
HECKE_DECLARE_ERROR(InternalMismatch);
HECKE_DECLARE_ERROR(ParseError);
HECKE_DECLARE_ERROR(ConfigError);
HECKE_DECLARE_ERROR(IoError);

#undef HECKE_DECLARE_ERROR

}  // namespace hecke
