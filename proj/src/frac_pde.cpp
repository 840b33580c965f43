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

#include "lrchain/frac_pde.hpp"

#include <gsl/gsl_fft_complex.h>

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "lrchain/dispersion.hpp"
#include "lrchain/resolvent.hpp"

namespace lrchain {

namespace {

constexpr double ALIAS_TOL = 1e-10;
constexpr double IM_RESIDUE_TOL = 1e-12;

void check_shape(double domain_length, std::size_t n_modes, double alpha,
                 double kappa) {
    if (!(domain_length > 0.0) || !std::isfinite(domain_length))
        throw DomainError("frac_pde: domain_length must be positive");
    if (n_modes < 4 || (n_modes & (n_modes - 1)) != 0)
        throw DomainError("frac_pde: n_modes must be a power of two >= 4");
    if (!(alpha > 0.0) || !(alpha <= 2.0))
        throw DomainError("frac_pde: alpha must lie in (0, 2]");
    if (!(kappa > 0.0) || !std::isfinite(kappa))
        throw DomainError("frac_pde: kappa must be positive");
}

void check_field(const FracField& field) {
    check_shape(field.domain_length, field.n_modes, field.alpha, field.kappa);
    if (field.coeffs.size() != field.n_modes ||
        field.initial_coeffs.size() != field.n_modes)
        throw GridMismatch("frac_pde: coefficient array does not match n_modes");
}

/// A real field has c(-j) = conj(c(j)) and real c(0), c(-n/2).
void check_real_symmetry(const FracField& field) {
    const std::size_t n = field.n_modes;
    double scale = 0.0;
    for (const auto& c : field.coeffs) scale = std::max(scale, std::abs(c));
    const double tol = IM_RESIDUE_TOL * scale;
    if (std::abs(field.coeffs[n / 2].imag()) > tol ||
        std::abs(field.coeffs[0].imag()) > tol)
        throw DomainError("frac_pde: zero/extreme modes of a real field "
                          "must be real");
    for (std::size_t j = 1; j < n / 2; ++j) {
        std::complex<double> diff =
            field.coeffs[n / 2 - j] - std::conj(field.coeffs[n / 2 + j]);
        if (std::abs(diff) > tol)
            throw DomainError(
                "frac_pde: transform lacks the conjugate symmetry of a "
                "real field at mode " + std::to_string(j));
    }
}

void check_aliasing(const FracField& field) {
    const double edge = std::max(std::abs(field.coeffs.front()),
                                 std::abs(field.coeffs.back()));
    if (edge > ALIAS_TOL)
        throw AliasWarning(
            "frac_pde: extreme Fourier mode has magnitude " +
            std::to_string(edge) +
            "; the field is not resolved on this grid");
}

}  // namespace

FracField field_from_modes(
    double domain_length, std::size_t n_modes, double alpha, double kappa,
    const std::function<std::complex<double>(double)>& w0hat) {
    check_shape(domain_length, n_modes, alpha, kappa);
    FracField field;
    field.domain_length = domain_length;
    field.n_modes = n_modes;
    field.alpha = alpha;
    field.kappa = kappa;
    field.time = 0.0;
    field.coeffs.resize(n_modes);
    for (std::size_t idx = 0; idx < n_modes; ++idx)
        field.coeffs[idx] = w0hat(field.p(idx));
    check_real_symmetry(field);
    field.initial_coeffs = field.coeffs;
    return field;
}

FracField field_from_function(double domain_length, std::size_t n_modes,
                              double alpha, double kappa,
                              const std::function<double(double)>& w0) {
    check_shape(domain_length, n_modes, alpha, kappa);
    const std::size_t n = n_modes;
    const double dy = domain_length / static_cast<double>(n);
    std::vector<double> data(2 * n);
    for (std::size_t m = 0; m < n; ++m) {
        double y = -0.5 * domain_length + static_cast<double>(m) * dy;
        data[2 * m] = w0(y);
        data[2 * m + 1] = 0.0;
    }
    if (gsl_fft_complex_radix2_forward(data.data(), 1, n) != 0)
        throw DomainError("frac_pde: forward FFT failed");

    FracField field;
    field.domain_length = domain_length;
    field.n_modes = n;
    field.alpha = alpha;
    field.kappa = kappa;
    field.time = 0.0;
    field.coeffs.resize(n);
    // Grid starting at -L/2 shifts each mode j by the phase (-1)^j.
    for (std::size_t idx = 0; idx < n; ++idx) {
        long j = static_cast<long>(idx) - static_cast<long>(n / 2);
        std::size_t k = static_cast<std::size_t>(j + static_cast<long>(n)) % n;
        double sign = (j % 2 == 0) ? 1.0 : -1.0;
        field.coeffs[idx] = sign * dy *
            std::complex<double>(data[2 * k], data[2 * k + 1]);
    }
    check_real_symmetry(field);
    field.initial_coeffs = field.coeffs;
    return field;
}

FracField field_delta(double domain_length, std::size_t n_modes, double alpha,
                      double kappa) {
    return field_from_modes(domain_length, n_modes, alpha, kappa,
                            [](double) { return std::complex<double>(1.0); });
}

FracField limit_field(const ModelParams& params, double domain_length,
                      std::size_t n_modes,
                      const std::function<std::complex<double>(double)>&
                          w0hat) {
    return field_from_modes(domain_length, n_modes, stable_index(params),
                            C_big(params), w0hat);
}

FracField evolve(const FracField& field, double dt) {
    check_field(field);
    if (!(dt >= 0.0))
        throw DomainError("frac_pde: evolve needs dt >= 0, got " +
                          std::to_string(dt));
    FracField out = field;
    out.time = field.time + dt;
    // Closed-form decay from the t = 0 anchor: composing steps is
    // bit-for-bit identical to a single step by the total time.
    for (std::size_t idx = 0; idx < out.n_modes; ++idx) {
        double p = out.p(idx);
        out.coeffs[idx] = out.initial_coeffs[idx] *
            std::exp(-out.kappa * std::pow(std::abs(p), out.alpha) * out.time);
    }
    return out;
}

std::vector<double> to_real_space(const FracField& field,
                                  const std::vector<double>& y_grid) {
    check_field(field);
    check_aliasing(field);
    const double L = field.domain_length;
    const std::size_t n = field.n_modes;
    std::vector<double> w(y_grid.size());
    double max_re = 0.0, max_im = 0.0;
    for (std::size_t i = 0; i < y_grid.size(); ++i) {
        double y = y_grid[i];
        if (!(y >= -0.5 * L) || !(y < 0.5 * L))
            throw DomainError("frac_pde: point " + std::to_string(y) +
                              " outside the torus [-L/2, L/2)");
        // Conjugate-pair sum: for a real field the imaginary parts of the
        // +-j terms cancel exactly, so any surviving imaginary part signals
        // corrupted (asymmetric) coefficients rather than roundoff.
        const std::complex<double> q = std::polar(1.0, 2.0 * PI * y / L);
        std::complex<double> u = q;
        std::complex<double> acc = field.coeffs[n / 2];
        // The unpaired extreme mode of a real field acts as a cosine.
        acc += field.coeffs[0] *
               std::cos(PI * static_cast<double>(n) * y / L);
        for (std::size_t j = 1; j < n / 2; ++j) {
            acc += field.coeffs[n / 2 + j] * u +
                   field.coeffs[n / 2 - j] * std::conj(u);
            u *= q;
        }
        w[i] = acc.real() / L;
        max_re = std::max(max_re, std::abs(acc.real() / L));
        max_im = std::max(max_im, std::abs(acc.imag() / L));
    }
    if (max_im > IM_RESIDUE_TOL * std::max(1.0, max_re))
        throw DomainError("frac_pde: inverse transform has imaginary residue " +
                          std::to_string(max_im));
    return w;
}

std::vector<double> to_real_grid(const FracField& field) {
    check_field(field);
    check_aliasing(field);
    const std::size_t n = field.n_modes;
    const double L = field.domain_length;
    std::vector<double> data(2 * n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        long j = static_cast<long>(idx) - static_cast<long>(n / 2);
        std::size_t k = static_cast<std::size_t>(j + static_cast<long>(n)) % n;
        double sign = (j % 2 == 0) ? 1.0 : -1.0;
        std::complex<double> c = sign * field.coeffs[idx];
        data[2 * k] = c.real();
        data[2 * k + 1] = c.imag();
    }
    if (gsl_fft_complex_radix2_inverse(data.data(), 1, n) != 0)
        throw DomainError("frac_pde: inverse FFT failed");
    std::vector<double> w(n);
    double max_re = 0.0, max_im = 0.0;
    const double scale = static_cast<double>(n) / L;
    for (std::size_t m = 0; m < n; ++m) {
        w[m] = scale * data[2 * m];
        max_re = std::max(max_re, std::abs(scale * data[2 * m]));
        max_im = std::max(max_im, std::abs(scale * data[2 * m + 1]));
    }
    if (max_im > IM_RESIDUE_TOL * std::max(1.0, max_re))
        throw DomainError("frac_pde: inverse transform has imaginary residue " +
                          std::to_string(max_im));
    return w;
}

double field_mass(const FracField& field) {
    check_field(field);
    return field.coeffs[field.n_modes / 2].real();
}

double boundary_mass_fraction(const FracField& field) {
    std::vector<double> w = to_real_grid(field);
    const std::size_t n = field.n_modes;
    const double L = field.domain_length;
    const double dy = L / static_cast<double>(n);
    double total = 0.0, boundary = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
        double y = -0.5 * L + static_cast<double>(m) * dy;
        double a = std::abs(w[m]) * dy;
        total += a;
        if (std::abs(y) >= 0.25 * L) boundary += a;
    }
    if (total == 0.0)
        throw DegenerateState("frac_pde: field with zero absolute mass");
    return boundary / total;
}

double compare_l2(const std::vector<double>& a, const std::vector<double>& b,
                  double dy) {
    if (a.size() != b.size())
        throw GridMismatch("compare_l2: profiles have different lengths");
    if (!(dy > 0.0)) throw DomainError("compare_l2: dy must be positive");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d * dy;
    }
    return std::sqrt(s);
}

std::string field_metadata_json(const FracField& field) {
    check_field(field);
    nlohmann::json j;
    j["alpha"] = field.alpha;
    j["domain_length"] = field.domain_length;
    j["kappa"] = field.kappa;
    j["n_modes"] = field.n_modes;
    j["time"] = field.time;
    return j.dump();
}

std::string profile_csv(const std::vector<double>& y,
                        const std::vector<double>& w) {
    if (y.size() != w.size())
        throw GridMismatch("profile_csv: grids have different lengths");
    std::string out = "y,W\n";
    char buf[80];
    for (std::size_t i = 0; i < y.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", y[i], w[i]);
        out += buf;
    }
    return out;
}

}  // namespace lrchain
