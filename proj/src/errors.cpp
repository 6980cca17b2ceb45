#include "ploi/errors.hpp"

namespace ploi {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Endpoint: return "EndpointError";
        case ErrorKind::Monotonicity: return "MonotonicityError";
        case ErrorKind::Domain: return "DomainError";
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::NotAnOrbital: return "NotAnOrbital";
        case ErrorKind::PointOutside: return "PointOutside";
        case ErrorKind::NoOrbital: return "NoOrbital";
        case ErrorKind::WrongDirection: return "WrongDirection";
        case ErrorKind::SearchExhausted: return "SearchExhausted";
        case ErrorKind::IdentityInput: return "IdentityInput";
        case ErrorKind::Nesting: return "NestingError";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::NotExemplary: return "NotExemplary";
        case ErrorKind::NoInconsistentOrbital: return "NoInconsistentOrbital";
        case ErrorKind::Imbalanced: return "ImbalanceError";
        case ErrorKind::Precondition: return "PreconditionError";
    }
    return "Error";
}

}  // namespace ploi
