// Copyright 2026 The lrchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.

#pragma once

/// @file
/// Model parameters shared by every module, the error taxonomy, and the
/// wavenumber reduction helper.

#include <cmath>
#include <stdexcept>
#include <string>

namespace lrchain {

inline constexpr double PI = 3.14159265358979323846264338327950288;

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An infinite-sum truncation bound cannot reach the requested tolerance.
struct NonConvergence : Error {
    using Error::Error;
};

/// The decay exponent is outside the admissible range of the operation.
struct UnsupportedTheta : Error {
    using Error::Error;
};

/// Argument outside the mathematical domain (e.g. derivative at k = 0).
struct DomainError : Error {
    using Error::Error;
};

struct QuadratureFailure : Error {
    using Error::Error;
};

/// A regression did not produce a usable fit (R^2 below threshold).
struct FitDegenerate : Error {
    using Error::Error;
};

struct DegenerateState : Error {
    using Error::Error;
};

struct GridMismatch : Error {
    using Error::Error;
};

/// Spectral data is unresolved: the extreme Fourier mode is not negligible.
struct AliasWarning : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

/// A verification check did not meet its tolerance.
struct CheckFailure : Error {
    using Error::Error;
};

struct InsufficientReplicas : Error {
    using Error::Error;
};

/// Parameters of the long-range chain and of series evaluation.
struct ModelParams {
    double theta = 4.0;      ///< interaction decay exponent, > 1
    double gamma0 = 1.0;     ///< noise strength, > 0
    double s = 0.0;          ///< noise-scaling exponent in [0, 1]
    double series_tol = 1e-12;
    long series_max_terms = 2000000;

    /// Checks the basic invariants; throws DomainError on violation.
    void validate() const {
        if (!(theta > 1.0))
            throw DomainError("ModelParams: theta must be > 1, got " +
                              std::to_string(theta));
        if (!(gamma0 > 0.0))
            throw DomainError("ModelParams: gamma0 must be > 0");
        if (!(s >= 0.0 && s <= 1.0))
            throw DomainError("ModelParams: s must lie in [0, 1]");
        if (!(series_tol > 0.0))
            throw DomainError("ModelParams: series_tol must be > 0");
        if (series_max_terms < 16)
            throw DomainError("ModelParams: series_max_terms must be >= 16");
    }

    /// Kinetic/resolvent call sites additionally require theta > 2.
    void require_theta_above_2(const char* where) const {
        if (!(theta > 2.0))
            throw UnsupportedTheta(std::string(where) +
                                   ": requires theta > 2, got " +
                                   std::to_string(theta));
    }
};

/// Reduces a wavenumber to the torus [-1/2, 1/2), half-integers rounding down.
inline double reduce_torus(double k) {
    double r = k - std::floor(k + 0.5);
    if (r >= 0.5) r -= 1.0;   // guards the floating-point edge at +1/2
    if (r < -0.5) r += 1.0;
    return r;
}

}  // namespace lrchain
