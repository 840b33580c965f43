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
/// Event-driven simulation of the scattering process K(t) and the flight
/// functional Z(t) = Int omega'(K(s)) ds, with estimators for the stable
/// scaling limit: tail law, characteristic-function exponent fit, kinetic
/// (Boltzmann) solution by Monte Carlo, and the homogenization deficit.
///
/// There is no time-step parameter anywhere in this module: jumps are
/// sampled exactly (exponential holding times with rate 2 gamma0 R(k),
/// post-collision wavenumbers by exact mixture rejection), and Z is the
/// exact sum of omega'(K) times holding intervals.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lrchain/params.hpp"
#include "lrchain/rng.hpp"

namespace lrchain {

/// One exact trajectory: K_0..K_m at jump times t_0 = 0 < ... < t_m, plus
/// the flight integral. z_at_last_jump = Z(t_m) is kept so a trajectory can
/// be resumed past its horizon bit-for-bit (the stream is rewound to just
/// before the holding draw that crossed the horizon).
struct JumpTrajectory {
    std::vector<double> states;
    std::vector<double> jump_times;
    double z_end = 0.0;
    double horizon = 0.0;
    double z_at_last_jump = 0.0;
};

/// Result of the stable-index characteristic-function fit.
struct LevyEstimate {
    double theta = 0.0;
    double exponent_fit = 0.0;     ///< fitted stable index, in (0, 2]
    double coefficient_fit = 0.0;  ///< fitted c in exp(-c |p|^alpha t)
    double std_error = 0.0;        ///< standard error of the exponent
    std::size_t n_samples = 0;
    double n_time = 0.0;  ///< the N used in Z(Nt)/N(theta)
    double r_squared = 0.0;
    double im_max_sigmas = 0.0;  ///< max |Im phi_hat| / stderr over fit nodes
};

/// Piecewise-Chebyshev surrogate of omega'(k) on dyadic octaves of |k|
/// (degree 16 per octave, relative accuracy ~1e-12 down to |k| = 1e-12),
/// odd in k. Evaluating the exact series per event would dominate the
/// simulation budget; the surrogate is deterministic given theta.
class OmegaPrimeTable {
  public:
    explicit OmegaPrimeTable(const ModelParams& params);
    double operator()(double k) const;
    int octaves() const { return n_oct_; }

  private:
    int n_oct_;
    std::vector<std::array<double, 17>> coef_;
};

/// Shared per-theta table (omega' does not depend on gamma0 or s).
const OmegaPrimeTable& omega_prime_table(const ModelParams& params);

/// Scaling normalization N(theta): N^{(7-theta)/6} for theta < 3,
/// ((log N)/3)^{1/2} N^{2/3} at theta = 3, N^{2/3} for theta > 3.
double n_scaling(const ModelParams& params, double N);

/// Probability that the post-collision draw uses the e2 component, i.e.
/// e1(k)/(e1(k)+e2(k)); exposed for the mixture tests.
double mixture_weight(double k);

/// Counters filled by the instrumented sampler overloads.
struct StepCounters {
    long long e1_draws = 0;
    long long e1_proposals = 0;
    long long e2_draws = 0;
    long long e2_proposals = 0;
};

/// Exact draw from the jump kernel R(k,.)/R(k): mixture of the e1 and e2
/// densities, each sampled by rejection from the uniform proposal
/// (envelopes 8/3 and 2). The result is clamped to |k'| >= 1e-12.
double sample_next_k(const ModelParams& params, double k, RngStream& rng,
                     StepCounters* counters = nullptr);

/// Exp(1) / (2 gamma0 R(k)): the exact holding time at state k.
double holding_time(const ModelParams& params, double k, RngStream& rng);

/// Draw K ~ pi(dk) = (2/3) R(k) dk by rejection from the uniform proposal
/// (envelope 3/2 = (2/3) max R, with max R = 9/4 at |k| = 1/3).
double sample_pi(RngStream& rng);

/// Event-driven trajectory from k0 over [0, horizon]; Z accumulated exactly.
JumpTrajectory simulate_trajectory(const ModelParams& params, double k0,
                                   double horizon, RngStream& rng);

/// Extends a finished trajectory to a later horizon on the same stream,
/// reproducing bit-for-bit what a single longer simulation would give.
void resume_trajectory(const ModelParams& params, JumpTrajectory& trajectory,
                       double new_horizon, RngStream& rng);

/// Lean trajectory kernel: final Z, final state, jump count; no recording.
/// Bitwise identical to simulate_trajectory on the same stream.
struct FlightSample {
    double z = 0.0;
    double k_end = 0.0;
    long long n_jumps = 0;
};
FlightSample flight(const ModelParams& params, double k0, double horizon,
                    RngStream& rng);

/// N pi(omega'(k)/(2 gamma0 R(k)) > N(theta) lambda), the finite-N tail
/// statistic; exceedance set located by scanning plus bisection, measured
/// with the exact antiderivative of R. Returns 0 if the set is empty.
double tail_statistic(const ModelParams& params, double N, double lambda);

/// n_samples i.i.d. values of Z(N t)/N(theta) with K(0) ~ pi; trajectory i
/// uses the independent stream (seed, i), so results are reproducible for
/// any execution order.
std::vector<double> sample_scaled_flights(const ModelParams& params, double N,
                                          double t, std::size_t n_samples,
                                          std::uint64_t seed);

/// Characteristic-function fit of exp(-c |p|^alpha t) on log-log axes.
struct CfFit {
    double exponent = 0.0;
    double coefficient = 0.0;
    double slope_stderr = 0.0;
    double r_squared = 0.0;
    double im_max_sigmas = 0.0;
    double window_lo = 0.0;
    double window_hi = 0.0;
    std::size_t n_points = 0;
};

/// Fit on a fixed window [p_lo, p_hi] (25 log-spaced nodes).
CfFit fit_cf_window(const std::vector<double>& z, double t, double p_lo,
                    double p_hi);

/// Fit on the adaptive window: one decade of p log-centered on the band
/// where 0.1 <= -log|phi_hat| <= 2 (below: noise; above: saturation).
CfFit fit_cf(const std::vector<double>& z, double t);

/// End-to-end stable-index estimate; throws FitDegenerate if R^2 < 0.9 or
/// the fitted index leaves (0, 2].
LevyEstimate estimate_stable_exponent(const ModelParams& params, double N,
                                      double t, std::size_t n_samples,
                                      std::uint64_t seed);

/// Smooth bump exp(-lambda/(r^2 - |y-y*|^2)) on B(y*, r), 0 outside;
/// lambda = 0 gives the indicator of the ball.
double bump_function(double lambda, double y_star, double r, double y);

/// Monte-Carlo kinetic solution u(y,k,t) = E_k[u0(y + Z(t), K(t))] on a
/// (y,k) grid; values in y-major order values[yi * nk + ki].
struct BoltzmannField {
    std::vector<double> y_grid;
    std::vector<double> k_grid;
    std::vector<double> values;
    std::vector<double> std_errors;
    double at(std::size_t yi, std::size_t ki) const {
        return values[yi * k_grid.size() + ki];
    }
    double stderr_at(std::size_t yi, std::size_t ki) const {
        return std_errors[yi * k_grid.size() + ki];
    }
};

BoltzmannField solve_boltzmann_mc(
    const ModelParams& params,
    const std::function<double(double, double)>& u0, double t,
    const std::vector<double>& y_grid, const std::vector<double>& k_grid,
    std::size_t n_samples, std::uint64_t seed);

/// u_N(N(theta) y, k, t) = E_k[u0(y + Z(Nt)/N(theta), K(Nt))] on a k-grid,
/// its k-average, and the homogenization deficit mean_k |u_N - avg|^2 with
/// the Monte-Carlo variance bias subtracted.
struct RescaledUN {
    std::vector<double> k_values;
    double k_average = 0.0;
    double deficit = 0.0;      ///< bias-corrected
    double deficit_raw = 0.0;  ///< plain mean square deviation
    double mean_variance = 0.0;  ///< average per-node MC variance of the mean
};

RescaledUN rescaled_uN(const ModelParams& params,
                       const std::function<double(double, double)>& u0,
                       double N, double t, double y,
                       const std::vector<double>& k_grid,
                       std::size_t n_samples, std::uint64_t seed);

/// One CSV row per (estimator, parameter tuple).
struct EstimatorRow {
    std::string statistic;
    double theta = 0.0;
    double gamma0 = 0.0;
    double N = 0.0;
    double t = 0.0;
    double value = 0.0;
    double std_error = 0.0;
    std::size_t n_samples = 0;
    std::uint64_t seed = 0;
};

std::string estimator_csv_header();
std::string to_csv(const EstimatorRow& row);

}  // namespace lrchain
