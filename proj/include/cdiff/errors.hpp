// errors.hpp -- error types shared by all cdiff modules.
#pragma once

#include <stdexcept>
#include <string>

namespace cdiff {

/// Base class for all library errors. The CLI maps these to exit code 2
/// (configuration / usage errors); computation results never throw once
/// inputs are validated.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// field construction
struct NonPrimeError : Error { using Error::Error; };
struct ReducibleModulusError : Error { using Error::Error; };
struct DegreeMismatchError : Error { using Error::Error; };

// element arithmetic
struct FieldMismatchError : Error { using Error::Error; };
struct DivisionByZeroError : Error { using Error::Error; };
struct CharTwoError : Error { using Error::Error; };
struct ZeroArgumentError : Error { using Error::Error; };
struct ExcludedPointError : Error { using Error::Error; };

// maps and sweeps
struct InvalidTableError : Error { using Error::Error; };
struct BudgetExceededError : Error { using Error::Error; };

// theory / harness
struct UnknownRuleError : Error { using Error::Error; };
struct CharMismatchError : Error { using Error::Error; };
struct EvenNError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace cdiff
