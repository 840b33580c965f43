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
/// Microscopic simulator of the finite periodic harmonic chain with
/// momentum-exchange noise: exact mode rotations for the deterministic
/// flow, exact conservation-sphere rotations for the noise, and ensemble
/// estimators for the spectral energy density and site-energy profile.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lrchain/params.hpp"
#include "lrchain/rng.hpp"

namespace lrchain {

/// Momenta and positions of an n-site periodic chain, together with the
/// periodized coupling row and the discrete mode frequencies derived from
/// it. n must be a power of two (radix-2 transforms throughout).
struct ChainState {
    std::size_t n = 0;
    std::vector<double> p;
    std::vector<double> q;
    double t = 0.0;
    double gamma = 0.0;  ///< noise strength for this run, >= 0
    std::vector<double> alpha_per;  ///< periodized coupling row, zero-sum
    std::vector<double> mode_freq;  ///< omega_n(j) = sqrt(a_hat_n(j))
};

/// Periodized coupling row: alpha_per[x] = -sum_m |x + m n|^(-theta) for
/// x != 0 (image sums accelerated with an Euler-Maclaurin tail) and
/// alpha_per[0] fixed so the row sums to zero. Symmetric by construction.
/// Requires n >= 8, a power of two.
std::vector<double> periodize_alpha(const ModelParams& params, std::size_t n);

/// Discrete spectrum of a symmetric zero-sum coupling row: mode_freq[j] =
/// sqrt of the j-th DFT coefficient, with mode_freq[0] = 0 pinned. Throws
/// DomainError if any nonzero mode has a non-positive coefficient.
std::vector<double> mode_frequencies(const std::vector<double>& alpha_per);

/// Draws a Gibbs sample at the given temperature: momenta i.i.d. normal,
/// position modes independent complex Gaussians with variance T/a_hat_n(j),
/// zero mode pinned to q_hat(0) = 0.
ChainState init_thermal(const ModelParams& params, std::size_t n,
                        double temperature, std::uint64_t seed);

/// Thermal state with the momenta inside the window |x - n/2| <= half_width
/// rescaled to temperature t_hot (a localized kinetic-energy bump).
ChainState init_hotspot(const ModelParams& params, std::size_t n,
                        double t_base, double t_hot, std::size_t half_width,
                        std::uint64_t seed);

/// Exact harmonic flow by dt: every nonzero mode rotates by omega_n(j) dt
/// in scaled phase space, the zero mode drifts freely. Conserves the energy
/// to roundoff and advances state.t by dt.
void step_harmonic(ChainState& state, double dt);

/// Applies the exact noise generator at site x with amplitude a: a rotation
/// of (p_{x-1}, p_x, p_{x+1}) about the diagonal axis by angle sqrt(3) a,
/// which conserves the triple's sum and sum of squares.
void apply_noise_rotation(ChainState& state, std::size_t x, double a);

/// One noise step of length dt: a fixed ascending sweep of site rotations
/// with i.i.d. amplitudes sqrt(gamma dt) xi_x. Leaves q and state.t alone;
/// gamma = 0 reduces to the identity (the stream still advances n draws).
void step_noise(ChainState& state, double dt, RngStream& rng);

/// n_steps of the splitting harmonic(dt/2), noise(dt), harmonic(dt/2).
void run_chain(ChainState& state, double dt, std::size_t n_steps,
               RngStream& rng);

/// Splitting step recommended for the shipped experiments:
/// 0.1 / max_j omega_n(j).
double recommended_dt(const ChainState& state);

/// H = (1/2n) sum_j (|p_hat_j|^2 + omega_j^2 |q_hat_j|^2).
double total_energy(const ChainState& state);

/// sum_x p_x (compensated).
double total_momentum(const ChainState& state);

/// e_x = p_x^2/2 - (1/4) sum_{x' != x} alpha_per[x - x'] (q_x - q_x')^2.
/// Summing over x regroups exactly into the total energy.
double site_energy(const ChainState& state, std::size_t x);

/// Unnormalized discrete transforms q_hat(j), p_hat(j) of the state.
struct ChainModes {
    std::vector<std::complex<double>> q_hat;
    std::vector<std::complex<double>> p_hat;
};
ChainModes mode_transform(const ChainState& state);

/// psi_hat(j) = omega_n(j) q_hat(j) + i p_hat(j); the zero mode is the pure
/// momentum contribution i p_hat(0). (1/n) sum |psi_hat|^2 = 2 H.
std::vector<std::complex<double>> wave_function(const ChainState& state);

enum class WignerKind { energy_profile, spectral_density };

/// Ensemble Wigner-type estimate. For spectral_density the grid holds the
/// mode wavenumbers k_j in [-1/2, 1/2) in increasing order and values are
/// (eps/2) E|psi_hat(k_j)|^2; for energy_profile the grid holds eps x and
/// values are (eps/2) E|psi_x|^2, with eps = 1/n.
struct WignerEstimate {
    WignerKind kind = WignerKind::energy_profile;
    std::vector<double> grid;
    std::vector<double> values;
    std::vector<double> std_errors;
    double eps = 0.0;
    std::size_t replicas = 0;
};

/// Averages over an ensemble of >= 30 equal-size states.
WignerEstimate estimate_wigner(const std::vector<ChainState>& states,
                               WignerKind kind);

/// Pairs the estimate with a test function: sum_x values_x J(eps x) for a
/// profile, eps sum_j values_j J(k_j) (a Riemann sum in dk) for a spectral
/// density.
double wigner_test_integral(const WignerEstimate& est,
                            const std::function<double(double)>& test_fn);

/// "coordinate,value,stderr" rows, 17 significant digits.
std::string wigner_csv(const WignerEstimate& est);

}  // namespace lrchain
