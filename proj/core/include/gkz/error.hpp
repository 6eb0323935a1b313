#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gkz {

enum class ErrorCode {
    InvalidInput,
    InvalidArgument,
    KernelRankNotOne,
    DependentSubset,
    ZeroRelationEntry,
    IndexOutOfRange,
    BetaNotInSpan,
    NotInLattice,
    CountMismatch,
    NotNonresonant,
    DegreeTooLarge,
    ExcludedCase,
    NotMinimalSupport,
    HypothesisViolated,
    RNotLessThanMultiplicity,
    SigmaIntegral,
    MismatchDetected,
    IrregularSingularity,
    InternalInvariant,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace gkz
