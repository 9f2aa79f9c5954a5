#pragma once

#include <stdexcept>
#include <string>

namespace colsig {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands with incompatible shapes or variable counts.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Input outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Backend or option combination that cannot be honoured.
class ConfigurationError : public Error {
public:
    using Error::Error;
};

/// Malformed or invariant-violating input data (C-complex files, graphs, specs).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An eigenvalue fell inside the guard band around the zero tolerance.
class IndeterminateInertia : public Error {
public:
    using Error::Error;
};

class InvalidCertificate : public Error {
public:
    using Error::Error;
};

/// Raised when a result would contradict a proven statement (e.g. a verified
/// concordance-root certificate at a prime-power torsion point).
class InconsistencyError : public Error {
public:
    using Error::Error;
};

/// Cobordism profile encodings that disagree with each other.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace colsig
