#pragma once

#include <stdexcept>
#include <string>

namespace abeltrace {

// Base class for every library error. `name()` is the stable machine-readable
// identifier used by the CLI's JSON error documents and exit-code mapping.
class AbelError : public std::runtime_error {
public:
    AbelError(std::string name, const std::string& message)
        : std::runtime_error(message), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define ABELTRACE_ERROR(Class)                                         \
    class Class : public AbelError {                                   \
    public:                                                            \
        explicit Class(const std::string& message)                     \
            : AbelError(#Class, message) {}                            \
    }

// parser
ABELTRACE_ERROR(SyntaxError);
ABELTRACE_ERROR(UnknownVariable);

// algebra_core
ABELTRACE_ERROR(NonMonicDivisor);
ABELTRACE_ERROR(NotCoprime);
ABELTRACE_ERROR(ZeroDegree);

// trace_engine
ABELTRACE_ERROR(ImproperIntersection);
ABELTRACE_ERROR(DegreeDropAtInfinity);
ABELTRACE_ERROR(PolarLocusMeetsCycle);
ABELTRACE_ERROR(NotReduced);

// reconstruct
ABELTRACE_ERROR(DegenerateHankel);
ABELTRACE_ERROR(NonSpecializable);
ABELTRACE_ERROR(StarViolation);
ABELTRACE_ERROR(StarStarViolation);
ABELTRACE_ERROR(DegenerateStildeSystem);

// numeric_oracle
ABELTRACE_ERROR(NearDiscriminant);
ABELTRACE_ERROR(LeadingCoefficientVanishes);
ABELTRACE_ERROR(PoleHit);

#undef ABELTRACE_ERROR

} // namespace abeltrace
