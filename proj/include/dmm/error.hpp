#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dmm {

enum class ErrorKind {
    BadInput,
    NotALattice,
    NotAMonoid,
    NotResiduated,
    BadInvolution,
    SyntaxError,
    UnboundVariable,
    NoInvolution,
    ExponentTooLarge,
    SignatureMismatch,
    NotASubuniverse,
    NotGenerating,
    ElementInB,
    WrongClass,
    SpecInvalid,
    NotADunnMonoid,
    NotOddSugihara,
    NotDeMorgan,
    IsIdempotent,
    InternalInvariantViolation,
};

std::string_view kindName(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(kindName(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace dmm
