#pragma once

#include <stdexcept>
#include <string>

namespace signet {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The same ordered node pair carries both signs.
class SignConflictError : public Error {
public:
    using Error::Error;
};

/// Malformed graph/schedule/config input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Input parsed but violates a semantic constraint (ranges, sizes, regimes).
class SemanticError : public Error {
public:
    using Error::Error;
};

/// A lemma checker was invoked outside the parameter regime it is stated for.
class RegimeViolation : public Error {
public:
    using Error::Error;
};

/// A state update produced a non-finite value.
class NonFiniteState : public Error {
public:
    using Error::Error;
};

/// Converged limits fit neither +y*, -y* nor 0 within tolerance.
class InconsistentLimits : public Error {
public:
    using Error::Error;
};

/// A theorem checker's hypotheses are not met by the supplied environment.
class HypothesisViolation : public Error {
public:
    using Error::Error;
};

} // namespace signet
