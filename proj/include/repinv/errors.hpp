#pragma once
#include <stdexcept>
#include <string>

namespace repinv {

// Base class for every error the library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Configuration / validation problems (CLI exit code 1).
struct ConfigError : Error { using Error::Error; };

// Numerical failures (CLI exit code 2).
struct SingularMetric : Error { using Error::Error; };
struct NonFiniteField : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct NoSuchTerm : Error { using Error::Error; };
struct UndefinedDegree : Error { using Error::Error; };
struct StepRejected : Error { using Error::Error; };
struct NonMonotone : Error { using Error::Error; };
struct BoundaryNode : Error { using Error::Error; };
struct WrongBraneDim : Error { using Error::Error; };
struct DegenerateSheet : Error { using Error::Error; };
struct Diverged : Error { using Error::Error; };
struct NonPeriodicBoundary : Error { using Error::Error; };

} // namespace repinv
