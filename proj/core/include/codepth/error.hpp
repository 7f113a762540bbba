#pragma once

#include <stdexcept>
#include <string>

namespace codepth {

// Input errors are the caller's fault (bad tuple, bad file); math errors mean
// the data contradicts a theorem or an internal check failed.
enum class ErrorKind { input, math };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, const std::string& what)
        : std::runtime_error(what), kind_(kind), code_(std::move(code)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& code() const noexcept { return code_; }

private:
    ErrorKind kind_;
    std::string code_;
};

#define CODEPTH_DEFINE_ERROR(Name, Kind)                                          \
    struct Name : Error {                                                         \
        explicit Name(const std::string& what) : Error(ErrorKind::Kind, #Name, what) {} \
    };

CODEPTH_DEFINE_ERROR(NonUnitDenominator, input)
CODEPTH_DEFINE_ERROR(InadmissibleInvariants, input)
CODEPTH_DEFINE_ERROR(OrderMismatch, input)
CODEPTH_DEFINE_ERROR(SOutOfRange, input)
CODEPTH_DEFINE_ERROR(EvenGenerator, input)
CODEPTH_DEFINE_ERROR(FieldMismatch, input)
CODEPTH_DEFINE_ERROR(NegativeWDimension, input)
CODEPTH_DEFINE_ERROR(HypothesisViolation, input)
CODEPTH_DEFINE_ERROR(PreconditionViolation, input)
CODEPTH_DEFINE_ERROR(InvalidInput, input)
CODEPTH_DEFINE_ERROR(GrowthViolation, math)
CODEPTH_DEFINE_ERROR(Unclassifiable, math)
CODEPTH_DEFINE_ERROR(InternalInconsistency, math)
CODEPTH_DEFINE_ERROR(EquivalenceViolation, math)

#undef CODEPTH_DEFINE_ERROR

} // namespace codepth
