#pragma once

#include <stdexcept>
#include <string>

namespace sq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define SQ_ERROR(name)                      \
    struct name : Error {                   \
        using Error::Error;                 \
    }

SQ_ERROR(VarMismatch);
SQ_ERROR(OddExponent);
SQ_ERROR(NonConvergentGrading);
SQ_ERROR(NotInvertible);
SQ_ERROR(OrderMismatch);
SQ_ERROR(UnsupportedOrder);
SQ_ERROR(InvalidPartition);
SQ_ERROR(DoesNotFit);
SQ_ERROR(NotAMatching);
SQ_ERROR(InternalInvariant);
SQ_ERROR(RegionMismatch);
SQ_ERROR(CalibrationError);
SQ_ERROR(NotHorizontal);
SQ_ERROR(ZeroWeight);
SQ_ERROR(EdgeOutsideRegion);
SQ_ERROR(NotSimplyConnected);
SQ_ERROR(LoopNotRealizable);
SQ_ERROR(ParseError);

#undef SQ_ERROR

}  // namespace sq
