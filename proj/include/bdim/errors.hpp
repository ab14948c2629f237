#ifndef BDIM_ERRORS_HPP
#define BDIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bdim {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define BDIM_DEFINE_ERROR(Name)                                  \
    struct Name : Error {                                        \
        explicit Name(const std::string& m) : Error(#Name ": " + m) {} \
    }

// poset-core
BDIM_DEFINE_ERROR(CycleDetected);
BDIM_DEFINE_ERROR(IdOutOfRange);
BDIM_DEFINE_ERROR(NTooSmall);
BDIM_DEFINE_ERROR(InvalidArgument);

// treedec
BDIM_DEFINE_ERROR(ParseError);           // carries "line N:" in the message
BDIM_DEFINE_ERROR(InconsistentHeader);
BDIM_DEFINE_ERROR(InvalidDecomposition);

// bp-toolkit
BDIM_DEFINE_ERROR(DomainsOverlap);
BDIM_DEFINE_ERROR(NotASubset);
BDIM_DEFINE_ERROR(ImpossiblePattern);

// signature-dag
BDIM_DEFINE_ERROR(PreconditionViolated);
BDIM_DEFINE_ERROR(LemmaViolation);
BDIM_DEFINE_ERROR(NotAPath);
BDIM_DEFINE_ERROR(ColorMismatch);

// families
BDIM_DEFINE_ERROR(BadColorOrder);
BDIM_DEFINE_ERROR(OddCycle);
BDIM_DEFINE_ERROR(MalformedKey);

// realizer
BDIM_DEFINE_ERROR(UnrealizedSignature);
BDIM_DEFINE_ERROR(VersionMismatch);
BDIM_DEFINE_ERROR(CorruptPayload);
BDIM_DEFINE_ERROR(BitLengthMismatch);

// reach-label
BDIM_DEFINE_ERROR(LengthMismatch);

#undef BDIM_DEFINE_ERROR

} // namespace bdim

#endif
