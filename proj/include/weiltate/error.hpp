#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weiltate {

enum class ErrorKind {
    Parse,
    InvalidArgument,
    DivisionByZero,
    OutOfRange,
    NotSquare,
    NotMonic,
    NotPrimePower,
    OddDegree,
    FunctionalEquationFails,
    RootModulusFails,
    MismatchedField,
    UnsupportedDiscriminant,
    BudgetExceeded,
    PrecisionInsufficient,
    Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace weiltate
