#pragma once

#include <stdexcept>
#include <string>

namespace gapn {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define GAPN_DEFINE_ERROR(Name)                 \
    class Name : public Error {                 \
    public:                                     \
        using Error::Error;                     \
    }

GAPN_DEFINE_ERROR(NotPrimeError);
GAPN_DEFINE_ERROR(ReducibleError);
GAPN_DEFINE_ERROR(TooLargeError);
GAPN_DEFINE_ERROR(DivisionByZeroError);
GAPN_DEFINE_ERROR(GuardExceededError);
GAPN_DEFINE_ERROR(ZeroFunctionError);
GAPN_DEFINE_ERROR(BadParametersError);
GAPN_DEFINE_ERROR(NotPermutationError);
GAPN_DEFINE_ERROR(SpecMismatchError);
GAPN_DEFINE_ERROR(DegreeTooHighError);
GAPN_DEFINE_ERROR(NonRationalSumError);
GAPN_DEFINE_ERROR(HypothesisFailedError);
GAPN_DEFINE_ERROR(VerificationFailedError);
GAPN_DEFINE_ERROR(NotDistinctError);
GAPN_DEFINE_ERROR(ParseError);

#undef GAPN_DEFINE_ERROR

} // namespace gapn
