#pragma once

#include <stdexcept>
#include <string>

namespace relalg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (bad JSON or wrong schema).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Well-formed input that violates a structural invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

class WidthMismatch : public Error {
public:
    using Error::Error;
};

/// Exhaustive axiom evaluation would exceed the configured budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A per-atom derived quantity (start/end identity atom) is not unique or
/// does not exist; the structure cannot satisfy the axioms.
class ProfileError : public Error {
public:
    using Error::Error;
};

class ChainError : public Error {
public:
    using Error::Error;
};

class InvalidMove : public Error {
public:
    using Error::Error;
};

/// The game was asked to start on a structure that fails the axioms.
class GameRefused : public Error {
public:
    using Error::Error;
};

/// An invariant that the winning strategy guarantees was broken. Always a bug
/// or a structure that slipped through sampled axiom checking.
class StrategyFailure : public Error {
public:
    using Error::Error;
};

class GuardExceeded : public Error {
public:
    using Error::Error;
};

} // namespace relalg
