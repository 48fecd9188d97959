// Copyright (c) 2026 the larmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace larmor {

/// Base class of every domain error thrown by this library. The CLI maps any
/// Error to exit code 1; usage errors are handled separately.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A numeric argument is NaN or infinite.
class NonFiniteInput : public Error {
public:
    using Error::Error;
};

/// An argument violates a stated precondition (negative eta, bad grid, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Natural-unit conversion requested for a massless particle.
class MasslessConversion : public Error {
public:
    using Error::Error;
};

/// Particle name not present in the registry.
class UnknownParticle : public Error {
public:
    using Error::Error;
};

/// Registry file missing, unparsable, or violating a field invariant.
class MalformedRegistry : public Error {
public:
    using Error::Error;
};

/// Limits requested for mass <= 0.
class NonPositiveMass : public Error {
public:
    using Error::Error;
};

/// |v| >= c.
class SuperluminalVelocity : public Error {
public:
    using Error::Error;
};

/// Derivative denominator vanishes (eta = 0 with |delta| = 1).
class SingularPoint : public Error {
public:
    using Error::Error;
};

/// Series expansion undefined: |delta| = 1 makes the denominator vanish.
class SingularExpansion : public Error {
public:
    using Error::Error;
};

/// Inputs fall outside an expansion's validity guard.
class OutsideExpansionDomain : public Error {
public:
    using Error::Error;
};

/// Matrix handed to the eigensolver is not Hermitian within tolerance.
class NotHermitian : public Error {
public:
    using Error::Error;
};

/// Jacobi iteration failed to reduce the off-diagonal norm (NaN poisoning).
class NoConvergence : public Error {
public:
    using Error::Error;
};

/// Eigenvector could not be assigned a clean spin/branch label.
class AmbiguousLabeling : public Error {
public:
    using Error::Error;
};

/// Per-row oracle cross-validation failed during a sweep.
class OracleMismatch : public Error {
public:
    using Error::Error;
};

namespace detail {

inline void require_finite(double value, const char* name) {
    if (!std::isfinite(value)) {
        throw NonFiniteInput(std::string(name) + " must be finite, got " +
                             std::to_string(value));
    }
}

}  // namespace detail

}  // namespace larmor
