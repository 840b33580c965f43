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

#include "lrchain/chain_sim.hpp"

#include <gsl/gsl_fft_complex.h>

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "lrchain/quad.hpp"

namespace lrchain {

namespace {

bool power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

void fft_forward(std::vector<std::complex<double>>& data) {
    gsl_fft_complex_radix2_forward(reinterpret_cast<double*>(data.data()), 1,
                                   data.size());
}

void fft_inverse(std::vector<std::complex<double>>& data) {
    gsl_fft_complex_radix2_inverse(reinterpret_cast<double*>(data.data()), 1,
                                   data.size());
}

std::vector<std::complex<double>> fft_of_real(const std::vector<double>& x) {
    std::vector<std::complex<double>> data(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) data[i] = {x[i], 0.0};
    fft_forward(data);
    return data;
}

/// sum_{m >= 0} (y + m n)^(-theta), image tail by Euler-Maclaurin.
double image_sum(double y, double n, double theta) {
    const int kDirect = 48;
    CompensatedSum s;
    for (int m = 0; m < kDirect; ++m)
        s.add(std::pow(y + m * n, -theta));
    const double z = y + kDirect * n;
    const double t1 = std::pow(z, 1.0 - theta) / (n * (theta - 1.0));
    const double t2 = 0.5 * std::pow(z, -theta);
    const double t3 = theta * n * std::pow(z, -theta - 1.0) / 12.0;
    const double t4 = -theta * (theta + 1.0) * (theta + 2.0) * n * n * n *
                      std::pow(z, -theta - 3.0) / 720.0;
    // The truncation error is the next correction, down from t4 by
    // (theta+3)(theta+4)(n/z)^2 / 42.
    const double err =
        std::abs(t4) * (theta + 3.0) * (theta + 4.0) * (n / z) * (n / z) / 42.0;
    const double total = s.value() + t1 + t2 + t3 + t4;
    if (!(err <= 1e-13 * total))
        throw NonConvergence(
            "periodize_alpha: image tail did not reach 1e-13 at theta = " +
            std::to_string(theta));
    return total;
}

void check_state(const ChainState& state) {
    if (!power_of_two(state.n) || state.p.size() != state.n ||
        state.q.size() != state.n || state.mode_freq.size() != state.n)
        throw GridMismatch("chain_sim: inconsistent state arrays");
}

std::vector<double> spectral_grid(std::size_t n) {
    std::vector<double> k(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = (i + n / 2) % n;
        k[i] = reduce_torus(static_cast<double>(j) / static_cast<double>(n));
    }
    return k;
}

}  // namespace

std::vector<double> periodize_alpha(const ModelParams& params,
                                    std::size_t n) {
    params.validate();
    if (n < 8 || !power_of_two(n))
        throw DomainError("periodize_alpha: n must be a power of two >= 8");
    const double nn = static_cast<double>(n);
    std::vector<double> alpha(n);
    for (std::size_t x = 1; x <= n / 2; ++x) {
        double v = -(image_sum(static_cast<double>(x), nn, params.theta) +
                     image_sum(static_cast<double>(n - x), nn, params.theta));
        alpha[x] = v;
        alpha[n - x] = v;
    }
    CompensatedSum row;
    for (std::size_t x = 1; x < n; ++x) row.add(alpha[x]);
    alpha[0] = -row.value();
    return alpha;
}

std::vector<double> mode_frequencies(const std::vector<double>& alpha_per) {
    const std::size_t n = alpha_per.size();
    if (!power_of_two(n))
        throw DomainError("mode_frequencies: length must be a power of two");
    std::vector<std::complex<double>> hat = fft_of_real(alpha_per);
    std::vector<double> freq(n, 0.0);
    for (std::size_t j = 1; j <= n / 2; ++j) {
        double a = hat[j].real();
        if (!(a > 0.0))
            throw DomainError("mode_frequencies: nonpositive spectrum at "
                              "mode " + std::to_string(j));
        double w = std::sqrt(a);
        freq[j] = w;
        freq[n - j] = w;
    }
    return freq;
}

ChainState init_thermal(const ModelParams& params, std::size_t n,
                        double temperature, std::uint64_t seed) {
    if (!(temperature > 0.0))
        throw DomainError("init_thermal: temperature must be positive");
    ChainState state;
    state.n = n;
    state.gamma = params.gamma0;
    state.alpha_per = periodize_alpha(params, n);
    state.mode_freq = mode_frequencies(state.alpha_per);
    RngStream rng(seed, 0);

    state.p.resize(n);
    const double sp = std::sqrt(temperature);
    for (std::size_t x = 0; x < n; ++x) state.p[x] = sp * rng.normal();

    std::vector<std::complex<double>> q_hat(n, {0.0, 0.0});
    const double nt = static_cast<double>(n) * temperature;
    for (std::size_t j = 1; j < n / 2; ++j) {
        double a_hat = state.mode_freq[j] * state.mode_freq[j];
        double sigma = std::sqrt(nt / (2.0 * a_hat));
        double re = sigma * rng.normal();
        double im = sigma * rng.normal();
        q_hat[j] = {re, im};
        q_hat[n - j] = {re, -im};
    }
    {
        double a_hat = state.mode_freq[n / 2] * state.mode_freq[n / 2];
        q_hat[n / 2] = {std::sqrt(nt / a_hat) * rng.normal(), 0.0};
    }
    fft_inverse(q_hat);
    state.q.resize(n);
    for (std::size_t x = 0; x < n; ++x) state.q[x] = q_hat[x].real();
    return state;
}

ChainState init_hotspot(const ModelParams& params, std::size_t n,
                        double t_base, double t_hot, std::size_t half_width,
                        std::uint64_t seed) {
    if (!(t_hot > 0.0))
        throw DomainError("init_hotspot: t_hot must be positive");
    if (half_width >= n / 2)
        throw DomainError("init_hotspot: window must fit inside the chain");
    ChainState state = init_thermal(params, n, t_base, seed);
    const double scale = std::sqrt(t_hot / t_base);
    for (std::size_t x = n / 2 - half_width; x <= n / 2 + half_width; ++x)
        state.p[x] *= scale;
    return state;
}

void step_harmonic(ChainState& state, double dt) {
    check_state(state);
    if (!(dt > 0.0))
        throw DomainError("step_harmonic: dt must be positive");
    const std::size_t n = state.n;
    std::vector<std::complex<double>> q_hat = fft_of_real(state.q);
    std::vector<std::complex<double>> p_hat = fft_of_real(state.p);
    q_hat[0] += p_hat[0] * dt;
    for (std::size_t j = 1; j < n; ++j) {
        const double w = state.mode_freq[j];
        const double c = std::cos(w * dt);
        const double s = std::sin(w * dt);
        std::complex<double> qj = q_hat[j], pj = p_hat[j];
        q_hat[j] = c * qj + (s / w) * pj;
        p_hat[j] = c * pj - (w * s) * qj;
    }
    fft_inverse(q_hat);
    fft_inverse(p_hat);
    for (std::size_t x = 0; x < n; ++x) {
        state.q[x] = q_hat[x].real();
        state.p[x] = p_hat[x].real();
    }
    state.t += dt;
}

void apply_noise_rotation(ChainState& state, std::size_t x, double a) {
    check_state(state);
    const std::size_t n = state.n;
    if (n < 4) throw DomainError("apply_noise_rotation: needs n >= 4");
    if (x >= n) throw DomainError("apply_noise_rotation: site out of range");
    const std::size_t xm = (x + n - 1) % n;
    const std::size_t xp = (x + 1) % n;
    const double v1 = state.p[xm], v2 = state.p[x], v3 = state.p[xp];
    const double s3 = std::sqrt(3.0);
    const double phi = s3 * a;
    const double c = std::cos(phi), s = std::sin(phi);
    // Axis (1,1,1)/sqrt(3); the generator moves v by v x (1,1,1), which is
    // a rotation by -sqrt(3) a about that axis.
    const double mean = (v1 + v2 + v3) / 3.0;
    const double u1 = (v3 - v2) / s3;
    const double u2 = (v1 - v3) / s3;
    const double u3 = (v2 - v1) / s3;
    const double one_c = 1.0 - c;
    state.p[xm] = c * v1 - s * u1 + one_c * mean;
    state.p[x] = c * v2 - s * u2 + one_c * mean;
    state.p[xp] = c * v3 - s * u3 + one_c * mean;
}

void step_noise(ChainState& state, double dt, RngStream& rng) {
    check_state(state);
    if (!(dt > 0.0)) throw DomainError("step_noise: dt must be positive");
    if (!(state.gamma >= 0.0))
        throw DomainError("step_noise: gamma must be nonnegative");
    const double amp = std::sqrt(state.gamma * dt);
    for (std::size_t x = 0; x < state.n; ++x) {
        double xi = rng.normal();
        apply_noise_rotation(state, x, amp * xi);
    }
}

void run_chain(ChainState& state, double dt, std::size_t n_steps,
               RngStream& rng) {
    if (!(dt > 0.0)) throw DomainError("run_chain: dt must be positive");
    for (std::size_t i = 0; i < n_steps; ++i) {
        step_harmonic(state, 0.5 * dt);
        step_noise(state, dt, rng);
        step_harmonic(state, 0.5 * dt);
    }
}

double recommended_dt(const ChainState& state) {
    check_state(state);
    double wmax = 0.0;
    for (double w : state.mode_freq) wmax = std::max(wmax, w);
    if (!(wmax > 0.0))
        throw DomainError("recommended_dt: state has no oscillating mode");
    return 0.1 / wmax;
}

double total_energy(const ChainState& state) {
    check_state(state);
    ChainModes m = mode_transform(state);
    CompensatedSum e;
    for (std::size_t j = 0; j < state.n; ++j) {
        const double w = state.mode_freq[j];
        e.add(std::norm(m.p_hat[j]) + w * w * std::norm(m.q_hat[j]));
    }
    return e.value() / (2.0 * static_cast<double>(state.n));
}

double total_momentum(const ChainState& state) {
    check_state(state);
    CompensatedSum s;
    for (double v : state.p) s.add(v);
    return s.value();
}

double site_energy(const ChainState& state, std::size_t x) {
    check_state(state);
    if (state.alpha_per.size() != state.n)
        throw GridMismatch("site_energy: missing periodized couplings");
    if (x >= state.n) throw DomainError("site_energy: site out of range");
    CompensatedSum pot;
    for (std::size_t d = 1; d < state.n; ++d) {
        const double diff = state.q[x] - state.q[(x + d) % state.n];
        pot.add(state.alpha_per[d] * diff * diff);
    }
    return 0.5 * state.p[x] * state.p[x] - 0.25 * pot.value();
}

ChainModes mode_transform(const ChainState& state) {
    check_state(state);
    ChainModes m;
    m.q_hat = fft_of_real(state.q);
    m.p_hat = fft_of_real(state.p);
    return m;
}

std::vector<std::complex<double>> wave_function(const ChainState& state) {
    ChainModes m = mode_transform(state);
    std::vector<std::complex<double>> psi(state.n);
    for (std::size_t j = 0; j < state.n; ++j)
        psi[j] = state.mode_freq[j] * m.q_hat[j] +
                 std::complex<double>(0.0, 1.0) * m.p_hat[j];
    return psi;
}

WignerEstimate estimate_wigner(const std::vector<ChainState>& states,
                               WignerKind kind) {
    if (states.size() < 30)
        throw InsufficientReplicas("estimate_wigner: needs >= 30 replicas, "
                                   "got " + std::to_string(states.size()));
    const std::size_t n = states[0].n;
    for (const ChainState& s : states)
        if (s.n != n)
            throw GridMismatch("estimate_wigner: mixed lattice sizes");
    const double eps = 1.0 / static_cast<double>(n);
    const std::size_t r = states.size();

    std::vector<CompensatedSum> sum(n), sum2(n);
    std::vector<double> node(n);
    for (const ChainState& s : states) {
        std::vector<std::complex<double>> psi = wave_function(s);
        if (kind == WignerKind::energy_profile) fft_inverse(psi);
        if (kind == WignerKind::spectral_density) {
            for (std::size_t i = 0; i < n; ++i)
                node[i] = 0.5 * eps * std::norm(psi[(i + n / 2) % n]);
        } else {
            for (std::size_t i = 0; i < n; ++i)
                node[i] = 0.5 * eps * std::norm(psi[i]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            sum[i].add(node[i]);
            sum2[i].add(node[i] * node[i]);
        }
    }

    WignerEstimate est;
    est.kind = kind;
    est.eps = eps;
    est.replicas = r;
    est.values.resize(n);
    est.std_errors.resize(n);
    if (kind == WignerKind::spectral_density) {
        est.grid = spectral_grid(n);
    } else {
        est.grid.resize(n);
        for (std::size_t x = 0; x < n; ++x)
            est.grid[x] = eps * static_cast<double>(x);
    }
    const double rr = static_cast<double>(r);
    for (std::size_t i = 0; i < n; ++i) {
        const double mean = sum[i].value() / rr;
        est.values[i] = mean;
        double var = (sum2[i].value() - rr * mean * mean) / (rr - 1.0);
        est.std_errors[i] = std::sqrt(std::max(0.0, var) / rr);
    }
    return est;
}

double wigner_test_integral(const WignerEstimate& est,
                            const std::function<double(double)>& test_fn) {
    if (est.grid.size() != est.values.size())
        throw GridMismatch("wigner_test_integral: malformed estimate");
    CompensatedSum s;
    for (std::size_t i = 0; i < est.grid.size(); ++i)
        s.add(est.values[i] * test_fn(est.grid[i]));
    return est.kind == WignerKind::spectral_density ? est.eps * s.value()
                                                    : s.value();
}

std::string wigner_csv(const WignerEstimate& est) {
    std::string out = "coordinate,value,stderr\n";
    char buf[96];
    for (std::size_t i = 0; i < est.grid.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", est.grid[i],
                      est.values[i], est.std_errors[i]);
        out += buf;
    }
    return out;
}

}  // namespace lrchain
