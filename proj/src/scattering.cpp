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

#include "lrchain/scattering.hpp"

#include <cmath>

namespace lrchain {

namespace {

void check_grid(std::size_t n) {
    if (n < 4 || n % 2 != 0)
        throw GridMismatch("GridFunction: n must be even and >= 4, got " +
                           std::to_string(n));
}

double sin2pi(double x) { return std::sin(PI * x) * std::sin(PI * x); }

}  // namespace

GridFunction::GridFunction(std::size_t n) : values_(n) { check_grid(n); }

GridFunction::GridFunction(std::vector<std::complex<double>> values)
    : values_(std::move(values)) {
    check_grid(values_.size());
}

std::complex<double> GridFunction::integral() const {
    std::complex<double> s{0.0, 0.0};
    for (const auto& v : values_) s += v;
    return s / static_cast<double>(values_.size());
}

double r_kernel(double k, double kp) {
    double d = k - kp;
    return 2.0 * (sin2pi(k) * std::sin(2.0 * PI * d) +
                  std::sin(2.0 * PI * k) * sin2pi(d));
}

double R_pair(double k, double kp) {
    double rp = r_kernel(k, k + kp);
    double rm = r_kernel(k, k - kp);
    return 0.5 * (rp * rp + rm * rm);
}

double R_mean(double k) {
    double s2 = sin2pi(k);
    double t = std::sin(2.0 * PI * k);
    return 2.0 * s2 * s2 + 1.5 * t * t;
}

double R_mean_integral(double a, double b) {
    // antiderivative (3/2)k - sin(2 pi k)/(2 pi) - sin(4 pi k)/(8 pi)
    auto F = [](double k) {
        return 1.5 * k - std::sin(2.0 * PI * k) / (2.0 * PI) -
               std::sin(4.0 * PI * k) / (8.0 * PI);
    };
    return F(b) - F(a);
}

double e_basis(int i, double k) {
    if (i == 1) {
        double s2 = sin2pi(k);
        return (8.0 / 3.0) * s2 * s2;
    }
    if (i == 2) {
        double t = std::sin(2.0 * PI * k);
        return 2.0 * t * t;
    }
    throw DomainError("e_basis: index must be 1 or 2");
}

double e_basis_integral(int i, double a, double b) {
    if (i == 1) {
        // antiderivative k - 2 sin(2 pi k)/(3 pi) + sin(4 pi k)/(12 pi)
        auto F = [](double k) {
            return k - 2.0 * std::sin(2.0 * PI * k) / (3.0 * PI) +
                   std::sin(4.0 * PI * k) / (12.0 * PI);
        };
        return F(b) - F(a);
    }
    if (i == 2) {
        // antiderivative k - sin(4 pi k)/(4 pi)
        auto F = [](double k) {
            return k - std::sin(4.0 * PI * k) / (4.0 * PI);
        };
        return F(b) - F(a);
    }
    throw DomainError("e_basis_integral: index must be 1 or 2");
}

double R_p_kernel(double k, double kp, double p) {
    double sp = sin2pi(p / 2.0);
    double spp = sin2pi(p);
    return 8.0 * (sin2pi(k) - sp) * (sin2pi(kp) - sp) *
           (sin2pi(k + kp) + sin2pi(k - kp) - 2.0 * spp);
}

double R_p_kernel_sum(double k, double kp, double p) {
    double s = 0.0;
    for (double iota : {1.0, -1.0}) {
        double arg = k + iota * kp;
        s += r_kernel(k + p / 2.0, arg) * r_kernel(k - p / 2.0, arg);
    }
    return 0.5 * s;
}

GridFunction L_apply(const GridFunction& f) {
    std::size_t n = f.size();
    std::complex<double> ip1{0.0, 0.0}, ip2{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
        double kj = f.k(j);
        ip1 += e_basis(1, kj) * f[j];
        ip2 += e_basis(2, kj) * f[j];
    }
    double inv = 1.0 / static_cast<double>(n);
    ip1 *= inv;
    ip2 *= inv;
    GridFunction out(n);
    for (std::size_t j = 0; j < n; ++j) {
        double kj = f.k(j);
        out[j] = 2.0 * (0.75 * (e_basis(1, kj) * ip2 + e_basis(2, kj) * ip1) -
                        R_mean(kj) * f[j]);
    }
    return out;
}

GridFunction L_apply_direct(const GridFunction& f) {
    std::size_t n = f.size();
    GridFunction out(n);
    double inv = 1.0 / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        double kj = f.k(j);
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t l = 0; l < n; ++l)
            acc += R_pair(kj, f.k(l)) * (f[l] - f[j]);
        out[j] = 2.0 * inv * acc;
    }
    return out;
}

double dirichlet_form(const GridFunction& f) {
    GridFunction lf = L_apply(f);
    double acc = 0.0;
    std::size_t n = f.size();
    for (std::size_t j = 0; j < n; ++j)
        acc -= (std::conj(f[j]) * lf[j]).real();
    return acc / static_cast<double>(n);
}

double dirichlet_form_double(const GridFunction& f) {
    std::size_t n = f.size();
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double kj = f.k(j);
        for (std::size_t l = 0; l < n; ++l) {
            double d = std::abs(f[j] - f[l]);
            acc += R_pair(kj, f.k(l)) * d * d;
        }
    }
    return acc / static_cast<double>(n * n);
}

}  // namespace lrchain
