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
/// Small statistics toolbox shared by the estimator tests: ordinary least
/// squares (via GSL), chi-square and Kolmogorov-Smirnov p-values, and
/// mean / standard-error reduction with compensated summation.

#include <cstddef>
#include <functional>
#include <vector>

namespace lrchain {

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    double intercept_stderr = 0.0;
    double r_squared = 0.0;
};

/// Ordinary least squares y = intercept + slope * x; needs >= 3 points.
LinearFit linear_fit(const std::vector<double>& x,
                     const std::vector<double>& y);

/// Upper-tail p-value of a chi-square statistic with dof degrees of freedom.
double chi2_pvalue(double chi2, int dof);

/// Kolmogorov-Smirnov statistic sup |F_n - F| against a continuous cdf.
double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf);

/// Asymptotic KS p-value (Kolmogorov series with the Stephens correction).
double ks_pvalue(double d, std::size_t n);

struct MeanStderr {
    double mean = 0.0;
    double std_error = 0.0;
    double variance = 0.0;
    std::size_t n = 0;
};

MeanStderr mean_stderr(const std::vector<double>& xs);

}  // namespace lrchain
