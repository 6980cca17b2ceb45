#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ploi {

enum class ErrorKind {
    Endpoint,
    Monotonicity,
    Domain,
    Parse,
    NotAnOrbital,
    PointOutside,
    NoOrbital,
    WrongDirection,
    SearchExhausted,
    IdentityInput,
    Nesting,
    BudgetExceeded,
    NotExemplary,
    NoInconsistentOrbital,
    Imbalanced,
    Precondition,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Base of every error raised by the library. `kind()` is what the CLI
// reports in its error JSON.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

template <ErrorKind K>
class ErrorOf : public Error {
public:
    explicit ErrorOf(const std::string& what) : Error(K, what) {}
};

using EndpointError = ErrorOf<ErrorKind::Endpoint>;
using MonotonicityError = ErrorOf<ErrorKind::Monotonicity>;
using DomainError = ErrorOf<ErrorKind::Domain>;
using ParseError = ErrorOf<ErrorKind::Parse>;
using NotAnOrbital = ErrorOf<ErrorKind::NotAnOrbital>;
using PointOutside = ErrorOf<ErrorKind::PointOutside>;
using NoOrbital = ErrorOf<ErrorKind::NoOrbital>;
using WrongDirection = ErrorOf<ErrorKind::WrongDirection>;
using IdentityInput = ErrorOf<ErrorKind::IdentityInput>;
using NestingError = ErrorOf<ErrorKind::Nesting>;
using NotExemplary = ErrorOf<ErrorKind::NotExemplary>;
using NoInconsistentOrbital = ErrorOf<ErrorKind::NoInconsistentOrbital>;
using ImbalanceError = ErrorOf<ErrorKind::Imbalanced>;
using PreconditionError = ErrorOf<ErrorKind::Precondition>;

// Budget errors carry no payload here; the pipeline drivers throw a
// subclass that also holds the stage trace.
using BudgetExceeded = ErrorOf<ErrorKind::BudgetExceeded>;

}  // namespace ploi
