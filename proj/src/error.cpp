#include "weiltate/error.hpp"

namespace weiltate {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::NotSquare: return "NotSquare";
        case ErrorKind::NotMonic: return "NotMonic";
        case ErrorKind::NotPrimePower: return "NotPrimePower";
        case ErrorKind::OddDegree: return "OddDegree";
        case ErrorKind::FunctionalEquationFails: return "FunctionalEquationFails";
        case ErrorKind::RootModulusFails: return "RootModulusFails";
        case ErrorKind::MismatchedField: return "MismatchedField";
        case ErrorKind::UnsupportedDiscriminant: return "UnsupportedDiscriminant";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::PrecisionInsufficient: return "PrecisionInsufficient";
        case ErrorKind::Internal: return "InternalError";
    }
    return "UnknownError";
}

}  // namespace weiltate
