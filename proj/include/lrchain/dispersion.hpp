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
/// Fourier data of the long-range interaction: the symbol a_hat(k), its
/// derivative, the dispersion relation omega = sqrt(a_hat) and its
/// derivative, difference quotients, the small-k constant C(theta), the
/// two-point function F, and the kinetic time scaling f_{theta,s}(eps).
///
/// a_hat(k) = 4 * sum_{x>=1} sin^2(pi k x) / x^theta
/// a_hat'(k) = 4 pi * sum_{x>=1} sin(2 pi k x) / x^(theta-1)   (theta > 2)

#include "lrchain/params.hpp"

namespace lrchain {

struct DispersionSample {
    double k = 0.0;
    double a_hat = 0.0;
    double a_hat_prime = 0.0;
    double omega = 0.0;
    double omega_prime = 0.0;
};

/// Symbol a_hat(k) >= 0 to absolute accuracy params.series_tol; a_hat(0) = 0.
double a_hat(const ModelParams& params, double k);

/// Derivative a_hat'(k); odd in k. Requires theta > 2.
double a_hat_prime(const ModelParams& params, double k);

/// omega = sqrt(a_hat), omega' = a_hat'/(2 omega). Requires k != 0, theta > 2.
DispersionSample omega_and_prime(const ModelParams& params, double k);

/// Small-k constant of the symbol:
///   4 pi^(theta-1) * Int_0^inf sin^2(y) y^-theta dy   (2 < theta < 3)
///   4 pi^2                                            (theta = 3)
///   4 pi^2 zeta(theta - 2)                            (theta > 3)
/// The 2<theta<3 branch is evaluated by adaptive quadrature with an analytic
/// oscillatory tail; closed_form=true instead uses the reflection identity
/// -2^theta pi^(theta-1) Gamma(1-theta) cos(pi(theta-1)/2) (test cross-route).
double C_theta(const ModelParams& params, bool closed_form = false);

/// Difference quotient (omega(k + eps p/2) - omega(k - eps p/2)) / eps, with
/// both arguments reduced to the torus.
double delta_eps_omega(const ModelParams& params, double eps, double p,
                       double k);

/// Kinetic time scaling f_{theta,s}(eps):
///   eps^((6 - s(theta-1))/(7-theta))   (theta < 3)
///   eps^s * h_s(eps)^3                 (theta = 3, s < 1)
///   eps                                (theta = 3, s = 1)
///   eps^((3-s)/2)                      (theta > 3)
double time_scaling(const ModelParams& params, double eps);

/// Index of the limiting stable law: 6/(7-theta) for theta <= 3, 3/2 above.
double stable_index(const ModelParams& params);

/// Inverse of y -> (y^4 / (-log y))^(1/(2(1-s))) on (0,1), by bisection to
/// relative accuracy 1e-12. Requires s < 1.
double h_s_inverse(double s, double eps);

/// Two-point function F(k,k') = (a_hat(k+k') - a_hat(k) - a_hat(k')) /
/// (omega(k) omega(k')); F1 = F + 2.
double F_two_point(const ModelParams& params, double k, double kp);

/// Rescaled difference quotient (the quantity whose eps -> 0 limit is
/// delta_eps_omega_rescaled_limit below): the wavenumber is contracted by
/// the kinetic scale and the quotient renormalized per theta branch.
double delta_eps_omega_rescaled(const ModelParams& params, double eps,
                                double p, double k);

/// Its limit: sgn(k) (theta-1) sqrt(C)/2 * |k|^-(3-theta)/2 for 2<theta<3;
/// sgn(k) sqrt(C) for theta >= 3.
double delta_eps_omega_rescaled_limit(const ModelParams& params, double k);

namespace detail {

/// sum_{x>=1} cos(2 pi k x)/x^s and sin(2 pi k x)/x^s by direct summation
/// with Euler-Maclaurin endpoint corrections and an integration-by-parts
/// oscillatory tail. Valid for s > 1, |k| in [kmin, 1/2]; cost ~ 1/|k| terms.
void trig_series_direct(double s, double k, double tol, long max_terms,
                        double& cos_sum, double& sin_sum);

/// Same sums via the Lerch/zeta expansion of the polylogarithm around
/// e^{2 pi i k} = 1; cost ~ 60 terms independent of k, stable to k ~ 1e-13.
void trig_series_expansion(double s, double k, double& cos_sum,
                           double& sin_sum);

/// a_hat via the subtracted expansion (no cancellation at small k).
double a_hat_expansion(double theta, double k);

/// a_hat'(k) via the subtracted expansion.
double a_hat_prime_expansion(double theta, double k);

}  // namespace detail

}  // namespace lrchain
