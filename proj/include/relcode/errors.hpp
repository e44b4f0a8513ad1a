#pragma once

#include <stdexcept>
#include <string>

namespace relcode {

// Base class for all toolkit errors. `name()` is the stable identifier used
// by the CLI when printing per-row failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
    virtual const char* name() const noexcept { return "Error"; }
};

#define RELCODE_DEFINE_ERROR(ErrName)                                       \
    class ErrName : public Error {                                          \
    public:                                                                 \
        explicit ErrName(const std::string& msg) : Error(msg) {}            \
        const char* name() const noexcept override { return #ErrName; }     \
    }

RELCODE_DEFINE_ERROR(InvalidParameter);
RELCODE_DEFINE_ERROR(OutOfRange);
RELCODE_DEFINE_ERROR(OutOfDomain);
RELCODE_DEFINE_ERROR(DegenerateConstraint);
RELCODE_DEFINE_ERROR(DivisionByZero);
RELCODE_DEFINE_ERROR(SupportMismatch);
RELCODE_DEFINE_ERROR(NumericOverflow);
RELCODE_DEFINE_ERROR(NoCriticalVelocity);
RELCODE_DEFINE_ERROR(UnreachableThreshold);
RELCODE_DEFINE_ERROR(NoCrossing);
RELCODE_DEFINE_ERROR(InconsistentObservations);
RELCODE_DEFINE_ERROR(BracketFailure);

#undef RELCODE_DEFINE_ERROR

} // namespace relcode
