#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define HURWITZ_DECLARE_ERROR(Name)            \
    class Name : public Error {                \
    public:                                    \
        using Error::Error;                    \
    }

HURWITZ_DECLARE_ERROR(ParityError);
HURWITZ_DECLARE_ERROR(DivideByZero);
HURWITZ_DECLARE_ERROR(ZeroInput);
HURWITZ_DECLARE_ERROR(OverflowError);
HURWITZ_DECLARE_ERROR(UnsupportedPrime);
HURWITZ_DECLARE_ERROR(ModulusMismatch);
HURWITZ_DECLARE_ERROR(SingularMatrix);
HURWITZ_DECLARE_ERROR(CoprimalityError);
HURWITZ_DECLARE_ERROR(NonPrimeNorm);
HURWITZ_DECLARE_ERROR(ScaleLimit);
HURWITZ_DECLARE_ERROR(ParseError);
// Raised when an internal identity fails; always a defect, never user error.
HURWITZ_DECLARE_ERROR(InvariantViolation);

#undef HURWITZ_DECLARE_ERROR

} // namespace hurwitz
