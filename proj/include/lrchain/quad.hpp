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
/// Thin quadrature layer over GSL plus compensated summation.

#include <cmath>
#include <functional>

namespace lrchain {

/// Neumaier compensated accumulator; add() order defines the result bitwise.
class CompensatedSum {
  public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Adaptive Gauss-Kronrod on [a, b] (GSL qags; handles endpoint
/// singularities). Throws QuadratureFailure if GSL cannot converge.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double epsabs = 0.0, double epsrel = 1e-11);

/// Adaptive quadrature on [a, +inf) (GSL qagiu).
double integrate_to_inf(const std::function<double(double)>& f, double a,
                        double epsabs = 0.0, double epsrel = 1e-11);

/// Fixed-order Gauss-Legendre on [a, b]; n up to 64 uses cached tables.
double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int n);

/// Integral of an eventually sign-alternating oscillatory function over
/// [0, inf): adaptive head over [0, z1], then block integrals between
/// consecutive zeros z_m = z1 + m*step accelerated by iterated Aitken.
double integrate_oscillatory(const std::function<double(double)>& f, double z1,
                             double step, int max_blocks = 400,
                             double epsabs = 1e-13);

}  // namespace lrchain
