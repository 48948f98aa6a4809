#pragma once

#include <stdexcept>
#include <string>

namespace modcalc {

/// Base class for every error raised by the kernel.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define MODCALC_DEFINE_ERROR(Name)                                            \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}  \
    }

MODCALC_DEFINE_ERROR(SyntaxError);
MODCALC_DEFINE_ERROR(UnknownIdentifier);
MODCALC_DEFINE_ERROR(DivisionByZeroFunction);
MODCALC_DEFINE_ERROR(IndexOutOfRange);
MODCALC_DEFINE_ERROR(PoleAtPoint);
MODCALC_DEFINE_ERROR(FrameMismatch);
MODCALC_DEFINE_ERROR(NotTopGrade);
MODCALC_DEFINE_ERROR(WrongBidegree);
MODCALC_DEFINE_ERROR(DegenerateVolume);
MODCALC_DEFINE_ERROR(NotLeafTangent);
MODCALC_DEFINE_ERROR(NotCoupling);
MODCALC_DEFINE_ERROR(DegenerateCouplingForm);
MODCALC_DEFINE_ERROR(GaugeNotInvertible);
MODCALC_DEFINE_ERROR(GaugeSingularAtSample);
MODCALC_DEFINE_ERROR(NotClosedCertificate);
MODCALC_DEFINE_ERROR(NotCasimirValued);
MODCALC_DEFINE_ERROR(LeafConditionViolated);
MODCALC_DEFINE_ERROR(UnknownCheckName);
MODCALC_DEFINE_ERROR(UnresolvedReference);
MODCALC_DEFINE_ERROR(SampleViolatesAssertion);

#undef MODCALC_DEFINE_ERROR

} // namespace modcalc
