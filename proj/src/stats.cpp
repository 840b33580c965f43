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

#include "lrchain/stats.hpp"

#include <gsl/gsl_fit.h>
#include <gsl/gsl_sf_gamma.h>

#include <algorithm>
#include <cmath>

#include "lrchain/params.hpp"
#include "lrchain/quad.hpp"

namespace lrchain {

LinearFit linear_fit(const std::vector<double>& x,
                     const std::vector<double>& y) {
    if (x.size() != y.size())
        throw GridMismatch("linear_fit: size mismatch");
    if (x.size() < 3) throw FitDegenerate("linear_fit: needs >= 3 points");
    double c0, c1, cov00, cov01, cov11, sumsq;
    gsl_fit_linear(x.data(), 1, y.data(), 1, x.size(), &c0, &c1, &cov00,
                   &cov01, &cov11, &sumsq);
    CompensatedSum my;
    for (double v : y) my.add(v);
    double ybar = my.value() / static_cast<double>(y.size());
    CompensatedSum sstot;
    for (double v : y) sstot.add((v - ybar) * (v - ybar));
    LinearFit fit;
    fit.slope = c1;
    fit.intercept = c0;
    fit.slope_stderr = std::sqrt(cov11);
    fit.intercept_stderr = std::sqrt(cov00);
    fit.r_squared = sstot.value() > 0.0 ? 1.0 - sumsq / sstot.value() : 0.0;
    return fit;
}

double chi2_pvalue(double chi2, int dof) {
    if (dof <= 0) throw DomainError("chi2_pvalue: dof must be positive");
    if (chi2 < 0.0) throw DomainError("chi2_pvalue: statistic must be >= 0");
    return gsl_sf_gamma_inc_Q(0.5 * dof, 0.5 * chi2);
}

double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf) {
    if (samples.empty()) throw DomainError("ks_statistic: empty sample");
    std::sort(samples.begin(), samples.end());
    double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        double f = cdf(samples[i]);
        d = std::max(d, f - static_cast<double>(i) / n);
        d = std::max(d, static_cast<double>(i + 1) / n - f);
    }
    return d;
}

double ks_pvalue(double d, std::size_t n) {
    if (n == 0) throw DomainError("ks_pvalue: n must be positive");
    double sn = std::sqrt(static_cast<double>(n));
    double lam = (sn + 0.12 + 0.11 / sn) * d;
    if (lam < 0.2) return 1.0;
    CompensatedSum q;
    double sign = 1.0;
    for (int j = 1; j <= 100; ++j) {
        double term = sign * std::exp(-2.0 * j * j * lam * lam);
        q.add(term);
        if (std::abs(term) < 1e-16) break;
        sign = -sign;
    }
    return std::min(1.0, std::max(0.0, 2.0 * q.value()));
}

MeanStderr mean_stderr(const std::vector<double>& xs) {
    if (xs.empty()) throw DomainError("mean_stderr: empty sample");
    CompensatedSum s;
    for (double v : xs) s.add(v);
    MeanStderr out;
    out.n = xs.size();
    out.mean = s.value() / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        CompensatedSum ss;
        for (double v : xs) ss.add((v - out.mean) * (v - out.mean));
        out.variance = ss.value() / static_cast<double>(xs.size() - 1);
        out.std_error =
            std::sqrt(out.variance / static_cast<double>(xs.size()));
    }
    return out;
}

}  // namespace lrchain
