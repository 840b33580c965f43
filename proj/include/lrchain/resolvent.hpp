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
/// Resolvent-side integrals and closed-form constants of the scaling limit:
/// the damped symbol D_eps, the Laplace-frame coefficient a_eps and its
/// dissipative part I_eps, the macroscopic coefficient C_big (two
/// independent closed-form routes: C_big and c_small), the tail-law
/// constant C_star, and the auxiliary residue / sine integrals.

#include <complex>

#include "lrchain/params.hpp"

namespace lrchain {

/// Carrier for a resolvent evaluation at fixed (eps, p, lambda).
struct ResolventPoint {
    double eps = 0.0;
    double p = 0.0;
    double lambda = 0.0;
    std::complex<double> value{0.0, 0.0};
};

/// D_eps(p,k,lambda) = f(eps) lambda + 2 gamma R(k) + i eps delta_eps_omega,
/// with gamma = eps^s gamma0.
std::complex<double> D_eps(const ModelParams& params, double eps, double p,
                           double lambda, double k);

/// a_eps(p,lambda) = Int dk (2 gamma R / f)(1 - 2 gamma R / D_eps).
/// Returns the real part; the imaginary part vanishes by parity in k and is
/// checked against 1e-10 internally. Requires theta > 2, s < 1, lambda > 0.
double a_eps(const ModelParams& params, double eps, double p, double lambda);

/// The lambda part of a_eps: lambda Int dk 2 gamma R (f lambda + 2 gamma R)
/// / |D_eps|^2. Exactly a_eps = a_eps_lambda_part + I_eps.
double a_eps_lambda_part(const ModelParams& params, double eps, double p,
                         double lambda);

/// I_eps(p,lambda) = Int dk 2 gamma R eps^2 (delta_eps_omega)^2
/// / (f |D_eps|^2) >= 0; even in p; I_eps(0,.) = 0.
double I_eps(const ModelParams& params, double eps, double p, double lambda);

/// Macroscopic coefficient of the |p|^alpha decay:
///   (24 pi^3 csc((4-theta)pi/(7-theta)) / (7-theta))
///     ((theta-1)/(24 pi^2))^(6/(7-theta))
///     gamma0^(-(theta-1)/(7-theta)) C(theta)^(3/(7-theta)),  2 < theta <= 3
///   (sqrt6/12) gamma0^(-1/2) C(theta)^(3/4),                 theta > 3.
double C_big(const ModelParams& params);

/// The same coefficient by the independent probabilistic route:
/// prefactor * Gamma(alpha+1) * Int_R (1-cos y)|y|^(-1-alpha) dy, with the
/// (1-cos) integral evaluated by quadrature (not by the reflection
/// identity), so agreement with C_big is a genuine two-path check.
double c_small(const ModelParams& params);

/// Tail-law constant:
///   (4 pi^2/3)((theta-1) sqrt(C)/(24 pi^2))^(6/(7-theta)),  2 < theta <= 3
///   (4 pi^2/3)(sqrt(C)/(12 pi^2))^(3/2),                    theta > 3.
double C_star(const ModelParams& params);

/// Int_R dk |k|^2/(|k|^4+1) |k|^(-tau) = pi csc(pi tau/4 + pi/4)/2,
/// closed form; tau in [0,1).
double residue_integral(double tau);

/// The same integral by adaptive quadrature with an algebraic tail series.
double residue_integral_quadrature(double tau);

/// Int_0^inf sin(y) y^(-a) dy = cos(a pi/2) Gamma(1-a), closed form;
/// a in (1,2).
double sine_integral(double a);

/// The same integral by between-zeros block summation with alternating
/// series acceleration.
double sine_integral_quadrature(double a);

/// Int_0^inf (1-cos y) y^(-1-a) dy by block quadrature on [0, 1e4] plus an
/// analytic tail; a in (1,2). Used by c_small.
double onecos_integral_quadrature(double a);

}  // namespace lrchain
