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
/// Scattering data of the conservative noise: the square-root kernel
/// r(k,k'), the jump kernel R(k,k') and its marginal R(k), the rank-2
/// factor functions e_1, e_2, the p-shifted kernel R(k,k',p), the jump
/// operator L, and the Dirichlet form.

#include <complex>
#include <cstddef>
#include <vector>

#include "lrchain/params.hpp"

namespace lrchain {

/// Function sampled on the uniform torus grid k_j = -1/2 + j/n.
/// Integrals use the n-point rectangle rule (1/n) sum_j values[j], which is
/// exact for trigonometric polynomials of degree < n/2.
class GridFunction {
  public:
    /// Zero function on n points. n must be even and >= 4.
    explicit GridFunction(std::size_t n);
    explicit GridFunction(std::vector<std::complex<double>> values);

    std::size_t size() const { return values_.size(); }
    double k(std::size_t j) const {
        return -0.5 + static_cast<double>(j) / static_cast<double>(size());
    }
    std::complex<double>& operator[](std::size_t j) { return values_[j]; }
    const std::complex<double>& operator[](std::size_t j) const {
        return values_[j];
    }

    /// (1/n) sum_j values[j].
    std::complex<double> integral() const;

    const std::vector<std::complex<double>>& values() const { return values_; }

  private:
    std::vector<std::complex<double>> values_;
};

/// Samples f on the n-point grid.
template <typename F>
GridFunction sample_grid(std::size_t n, F&& f) {
    GridFunction g(n);
    for (std::size_t j = 0; j < n; ++j) g[j] = f(g.k(j));
    return g;
}

/// r(k,k') = 2 [sin^2(pi k) sin(2 pi (k-k')) + sin(2 pi k) sin^2(pi (k-k'))].
/// The overall factor 2 on both terms is fixed by Int r(k,.)^2 dk' = R(k)
/// and by the rank-2 factorization of R(k,k') below.
double r_kernel(double k, double kp);

/// R(k,k') = (1/2)[r(k, k+k')^2 + r(k, k-k')^2]; symmetric, >= 0.
double R_pair(double k, double kp);

/// R(k) = 2 sin^4(pi k) + (3/2) sin^2(2 pi k) = Int R(k,.) dk'.
double R_mean(double k);

/// Exact antiderivative: Int_a^b R_mean(k) dk.
double R_mean_integral(double a, double b);

/// e_1(k) = (8/3) sin^4(pi k), e_2(k) = 2 sin^2(2 pi k); Int e_i = 1.
double e_basis(int i, double k);

/// Exact antiderivative: Int_a^b e_i(k) dk.
double e_basis_integral(int i, double a, double b);

/// R(k,k',p), product form:
/// 8 (sin^2 pi k - sin^2(pi p/2)) (sin^2 pi k' - sin^2(pi p/2))
///   (sin^2 pi(k+k') + sin^2 pi(k-k') - 2 sin^2 pi p).
double R_p_kernel(double k, double kp, double p);

/// Same kernel from its defining sum
/// (1/2) sum_{i=+-1} r(k+p/2, k+i k') r(k-p/2, k+i k'); agrees with the
/// product form exactly (kept as an independent evaluation route).
double R_p_kernel_sum(double k, double kp, double p);

/// (L f)(k) = 2 Int R(k,k') (f(k') - f(k)) dk', evaluated O(n) through the
/// rank-2 structure R = (3/4)(e_1 x e_2 + e_2 x e_1).
GridFunction L_apply(const GridFunction& f);

/// O(n^2) double-sum evaluation of L; reference path for tests.
GridFunction L_apply_direct(const GridFunction& f);

/// Dirichlet form E(f) = Int conj(f) (-L f) dk >= 0, via the rank-2 path.
double dirichlet_form(const GridFunction& f);

/// E(f) = Int Int R(k,k') |f(k) - f(k')|^2 dk dk'; O(n^2) reference path.
double dirichlet_form_double(const GridFunction& f);

}  // namespace lrchain
