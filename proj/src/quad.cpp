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

#include "lrchain/quad.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "lrchain/params.hpp"

namespace lrchain {

namespace {

struct GslInit {
    GslInit() { gsl_set_error_handler_off(); }
};
const GslInit gsl_init_once;

struct Workspace {
    gsl_integration_workspace* w;
    explicit Workspace(size_t n) : w(gsl_integration_workspace_alloc(n)) {}
    ~Workspace() { gsl_integration_workspace_free(w); }
};

double call_thunk(double x, void* p) {
    return (*static_cast<const std::function<double(double)>*>(p))(x);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double epsabs, double epsrel) {
    Workspace ws(4096);
    gsl_function gf;
    gf.function = &call_thunk;
    gf.params = const_cast<std::function<double(double)>*>(&f);
    double result = 0.0, abserr = 0.0;
    int status = gsl_integration_qags(&gf, a, b, epsabs, epsrel, 4096, ws.w,
                                      &result, &abserr);
    // round-off-limited convergence is acceptable when the reported error is
    // already far below the integrand scale
    if (status != GSL_SUCCESS && status != GSL_EROUND)
        throw QuadratureFailure("integrate: qags failed with status " +
                                std::to_string(status));
    return result;
}

double integrate_to_inf(const std::function<double(double)>& f, double a,
                        double epsabs, double epsrel) {
    Workspace ws(4096);
    gsl_function gf;
    gf.function = &call_thunk;
    gf.params = const_cast<std::function<double(double)>*>(&f);
    double result = 0.0, abserr = 0.0;
    int status = gsl_integration_qagiu(&gf, a, epsabs, epsrel, 4096, ws.w,
                                       &result, &abserr);
    if (status != GSL_SUCCESS && status != GSL_EROUND)
        throw QuadratureFailure("integrate_to_inf: qagiu failed with status " +
                                std::to_string(status));
    return result;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int n) {
    gsl_integration_glfixed_table* t = gsl_integration_glfixed_table_alloc(
        static_cast<size_t>(n));
    if (!t) throw QuadratureFailure("integrate_gl: table allocation failed");
    double acc = 0.0;
    for (size_t i = 0; i < static_cast<size_t>(n); ++i) {
        double xi, wi;
        gsl_integration_glfixed_point(a, b, i, &xi, &wi, t);
        acc += wi * f(xi);
    }
    gsl_integration_glfixed_table_free(t);
    return acc;
}

double integrate_oscillatory(const std::function<double(double)>& f, double z1,
                             double step, int max_blocks, double epsabs) {
    double head = integrate(f, 0.0, z1, epsabs, 1e-12);

    // partial sums of the alternating block series
    std::vector<double> partial;
    partial.reserve(static_cast<size_t>(max_blocks));
    CompensatedSum tail;
    for (int m = 0; m < max_blocks; ++m) {
        double lo = z1 + m * step;
        double blk = integrate(f, lo, lo + step, epsabs, 1e-12);
        tail.add(blk);
        partial.push_back(tail.value());
        if (std::abs(blk) < epsabs && m > 4) break;
    }

    // iterated Aitken delta-squared on the partial sums
    std::vector<double> v = partial;
    while (v.size() >= 3) {
        std::vector<double> next;
        next.reserve(v.size() - 2);
        for (size_t i = 0; i + 2 < v.size(); ++i) {
            double d1 = v[i + 1] - v[i];
            double d2 = v[i + 2] - 2.0 * v[i + 1] + v[i];
            if (d2 == 0.0)
                next.push_back(v[i + 2]);
            else
                next.push_back(v[i + 2] - (v[i + 2] - v[i + 1]) *
                                              (v[i + 2] - v[i + 1]) / d2);
        }
        if (next.empty()) break;
        if (std::abs(next.back() - v.back()) < 0.25 * epsabs) {
            v = next;
            break;
        }
        v = std::move(next);
    }
    return head + (v.empty() ? 0.0 : v.back());
}

}  // namespace lrchain
