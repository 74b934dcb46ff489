#pragma once

#include <stdexcept>
#include <string>

namespace vtx {

// Every library failure derives from Error so callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define VTX_DEFINE_ERROR(Name)                                                 \
    struct Name : Error {                                                      \
        explicit Name(const std::string &what) : Error(#Name ": " + what) {}   \
    }

VTX_DEFINE_ERROR(ExponentOutsideWindow);
VTX_DEFINE_ERROR(NonSummableProduct);
VTX_DEFINE_ERROR(WindowTooSmall);
VTX_DEFINE_ERROR(MalformedStructure);
VTX_DEFINE_ERROR(NonNilpotentD);
VTX_DEFINE_ERROR(NotADerivation);
VTX_DEFINE_ERROR(CocycleInvalid);
VTX_DEFINE_ERROR(GradingInvalid);
VTX_DEFINE_ERROR(NotAnAutomorphism);
VTX_DEFINE_ERROR(NotCompatible);
VTX_DEFINE_ERROR(CapExceeded);
VTX_DEFINE_ERROR(ParseError);
VTX_DEFINE_ERROR(ValidationError);

#undef VTX_DEFINE_ERROR

} // namespace vtx
