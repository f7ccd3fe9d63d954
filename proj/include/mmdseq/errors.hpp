#pragma once

#include <stdexcept>
#include <string>

namespace mmdseq {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A sequence is too short for the requested statistic (estimator needs
// at least two samples per side).
struct LengthError : Error {
    using Error::Error;
};

// A configuration value violates a documented invariant. `field` names the
// offending key when known.
struct ValidationError : Error {
    std::string field;
    ValidationError(std::string field_name, const std::string& what)
        : Error(field_name.empty() ? what : field_name + ": " + what),
          field(std::move(field_name)) {}
};

// Cluster geometry is not separable (minimal inter-cluster distance does not
// exceed the maximal intra-cluster distance).
struct SeparationError : ValidationError {
    using ValidationError::ValidationError;
};

// An operation that needs the null cluster was invoked on a problem without one.
struct MissingNullError : ValidationError {
    using ValidationError::ValidationError;
};

// Syntax error in a config document.
struct ParseError : Error {
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

struct UnsupportedKernelError : Error {
    using Error::Error;
};

struct UnsupportedUncertaintyError : Error {
    using Error::Error;
};

// A sample source ran out of data before the test could finish.
struct SourceExhaustedError : Error {
    using Error::Error;
};

// Threshold arity does not match the (test, case) combination.
struct ArityError : Error {
    using Error::Error;
};

// A threshold pair is ordered the wrong way (lambda1 > lambda2).
struct DomainError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace mmdseq
