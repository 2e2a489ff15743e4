#ifndef GF4SSS_ERRORS_HPP
#define GF4SSS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gf4sss {

// Base of everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration would exceed the 2^26-codeword budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

// Semantic errors (bad inputs, unusable parameters, failed hypotheses).
struct DomainError : Error {
    using Error::Error;
};

struct LengthMismatch : DomainError {
    using DomainError::DomainError;
};
struct ZeroCode : DomainError {
    using DomainError::DomainError;
};
struct ParseError : DomainError {
    using DomainError::DomainError;
};
struct EmptyBlockSet : DomainError {
    using DomainError::DomainError;
};
struct NonIntegral : DomainError {
    using DomainError::DomainError;
};
struct MixedWeights : DomainError {
    using DomainError::DomainError;
};
struct UnsupportedLength : DomainError {
    using DomainError::DomainError;
};
struct UnreachableSecret : DomainError {
    using DomainError::DomainError;
};
struct SameClass : DomainError {
    using DomainError::DomainError;
};
struct MissingShare : DomainError {
    using DomainError::DomainError;
};
struct HypothesisFailed : DomainError {
    using DomainError::DomainError;
};
struct NotOneDesign : DomainError {
    using DomainError::DomainError;
};
struct UnknownName : DomainError {
    using DomainError::DomainError;
};

}  // namespace gf4sss

#endif
