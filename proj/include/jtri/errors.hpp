#pragma once

#include <stdexcept>
#include <string>

namespace jtri {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand dimensions do not match.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A parameter is outside its documented domain (p < 1, bad index, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A hypothesis of the requested check or construction does not hold for
/// the input. The conclusion is meaningless, so the operation refuses to
/// run instead of reporting a failure it cannot interpret.
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// A generator (or other required-nilpotent element) has spectrum away
/// from zero.
class NotNilpotent : public HypothesisError {
public:
    using HypothesisError::HypothesisError;
};

/// The computation succeeded structurally but an audited residual exceeds
/// its tolerance. Tolerances need revisiting; the result is not returned.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Two eigenvalue clusters are closer than the separation bound, so Riesz
/// projections are not defined at the requested tolerance.
class ClusterAmbiguity : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// The eigenvalue test and the matrix-power test for nilpotency disagree.
/// Signals ill-conditioning; the caller must adjust tolerances.
class AmbiguousNilpotency : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Triangularization succeeded structurally but the conjugated generators
/// are not strictly upper within tolerance.
class ResidualExceeded : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// A LAPACK driver failed (non-convergence or illegal argument).
class EigensolverFailure : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// File or stream I/O problem, including malformed instance files.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace jtri
