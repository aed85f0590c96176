#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define DUNKL_DEFINE_ERROR(Name)          \
    class Name : public Error {           \
    public:                               \
        using Error::Error;               \
    }

// reflection
DUNKL_DEFINE_ERROR(NonClosedSystem);
DUNKL_DEFINE_ERROR(InvalidRootSystem);
// polyalg
DUNKL_DEFINE_ERROR(DimensionMismatch);
DUNKL_DEFINE_ERROR(NonzeroRemainder);
DUNKL_DEFINE_ERROR(DegreeCapExceeded);
// hermite
DUNKL_DEFINE_ERROR(GramSingular);
DUNKL_DEFINE_ERROR(IndexOutOfTruncation);
DUNKL_DEFINE_ERROR(PolynomialsUnavailable);
// kernels / quadrature
DUNKL_DEFINE_ERROR(QuadratureNonConvergence);
DUNKL_DEFINE_ERROR(SeriesNonConvergence);
DUNKL_DEFINE_ERROR(WrongGroup);
DUNKL_DEFINE_ERROR(TruncationTooCoarse);
DUNKL_DEFINE_ERROR(OrbitTooClose);
// spectral
DUNKL_DEFINE_ERROR(MomentMatrixSingular);
DUNKL_DEFINE_ERROR(OrderTooSmall);
// verify
DUNKL_DEFINE_ERROR(SupportOverlap);
DUNKL_DEFINE_ERROR(MonteCarloVarianceTooHigh);
// io / cli
DUNKL_DEFINE_ERROR(ConfigError);
DUNKL_DEFINE_ERROR(ChecksumError);

#undef DUNKL_DEFINE_ERROR

}  // namespace dunkl
