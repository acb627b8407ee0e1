#pragma once

#include <stdexcept>
#include <string>

namespace tracedual {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define TRACEDUAL_ERROR_TYPE(Name) \
    struct Name : Error {          \
        using Error::Error;        \
    }

TRACEDUAL_ERROR_TYPE(NonPrimeP);
TRACEDUAL_ERROR_TYPE(EvenCharacteristic);
TRACEDUAL_ERROR_TYPE(ReducibleModulus);
TRACEDUAL_ERROR_TYPE(DivisionByZero);
TRACEDUAL_ERROR_TYPE(DegreeExceedsLength);
TRACEDUAL_ERROR_TYPE(BothZero);
TRACEDUAL_ERROR_TYPE(FactorizationMismatch);
TRACEDUAL_ERROR_TYPE(LengthMismatch);
TRACEDUAL_ERROR_TYPE(SpecViolation);
TRACEDUAL_ERROR_TYPE(NonExactDivision);
TRACEDUAL_ERROR_TYPE(OddLength);
TRACEDUAL_ERROR_TYPE(NotADivisor);
TRACEDUAL_ERROR_TYPE(NotAModule);
TRACEDUAL_ERROR_TYPE(TooLarge);
TRACEDUAL_ERROR_TYPE(ParseError);

#undef TRACEDUAL_ERROR_TYPE

}  // namespace tracedual
