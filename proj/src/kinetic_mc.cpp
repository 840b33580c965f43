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

#include "lrchain/kinetic_mc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>

#include "lrchain/dispersion.hpp"
#include "lrchain/quad.hpp"
#include "lrchain/scattering.hpp"
#include "lrchain/stats.hpp"

namespace lrchain {

namespace {

constexpr double K_CLAMP = 1e-12;

double clamp_k(double k) {
    if (std::abs(k) < K_CLAMP) return k < 0.0 ? -K_CLAMP : K_CLAMP;
    return k;
}

double holding_impl(double gamma0, double k, RngStream& rng) {
    return rng.exponential() / (2.0 * gamma0 * R_mean(k));
}

/// Post-collision draw; k must be nonzero (clamped upstream).
double next_k_impl(double k, RngStream& rng, StepCounters* ctr) {
    double kp;
    if (rng.uniform() < mixture_weight(k)) {
        // density e2(k') = 2 sin^2(2 pi k'), envelope 2: accept with
        // probability sin^2(2 pi k').
        for (;;) {
            kp = rng.uniform() - 0.5;
            if (ctr) ++ctr->e2_proposals;
            double t = std::sin(2.0 * PI * kp);
            if (rng.uniform() <= t * t) break;
        }
        if (ctr) ++ctr->e2_draws;
    } else {
        // density e1(k') = (8/3) sin^4(pi k'), envelope 8/3: accept with
        // probability sin^4(pi k').
        for (;;) {
            kp = rng.uniform() - 0.5;
            if (ctr) ++ctr->e1_proposals;
            double s = std::sin(PI * kp);
            double s2 = s * s;
            if (rng.uniform() <= s2 * s2) break;
        }
        if (ctr) ++ctr->e1_draws;
    }
    return clamp_k(kp);
}

/// Core event loop from state (k, t, z); stops at the horizon, rewinding
/// the stream past the unconsumed crossing draw. Appends to rec if given.
FlightSample flight_core(const ModelParams& params, const OmegaPrimeTable& wp,
                         double k, double t, double z, double horizon,
                         RngStream& rng, JumpTrajectory* rec) {
    long long nj = 0;
    for (;;) {
        std::uint64_t pos = rng.position();
        double dt = holding_impl(params.gamma0, k, rng);
        double tn = t + dt;
        if (!(tn < horizon)) {
            rng.seek(pos);
            if (rec) {
                rec->z_at_last_jump = z;
                rec->z_end = z + wp(k) * (horizon - t);
                rec->horizon = horizon;
            }
            return {z + wp(k) * (horizon - t), k, nj};
        }
        z += wp(k) * dt;
        t = tn;
        k = next_k_impl(k, rng, nullptr);
        ++nj;
        if (rec) {
            rec->states.push_back(k);
            rec->jump_times.push_back(t);
        }
    }
}

double validated_start(const ModelParams& params, double k0, double horizon,
                       const char* where) {
    params.validate();
    params.require_theta_above_2(where);
    if (!(horizon > 0.0))
        throw DomainError(std::string(where) + ": horizon must be > 0");
    double k = reduce_torus(k0);
    if (k == 0.0)
        throw DegenerateState(std::string(where) + ": k0 = 0 is absorbing");
    return clamp_k(k);
}

double sample_pi_impl(RngStream& rng) {
    // density (2/3) R(k) <= 3/2 over the uniform proposal (R peaks at 9/4
    // where sin^2(pi k) = 3/4): accept w.p. (4/9) R(k), rate 2/3.
    for (;;) {
        double k = rng.uniform() - 0.5;
        if (rng.uniform() <= (4.0 / 9.0) * R_mean(k)) return clamp_k(k);
    }
}

}  // namespace

OmegaPrimeTable::OmegaPrimeTable(const ModelParams& params) : n_oct_(46) {
    params.validate();
    params.require_theta_above_2("OmegaPrimeTable");
    const int deg = 16;
    coef_.resize(n_oct_);
    for (int j = 0; j < n_oct_; ++j) {
        double lo = std::ldexp(1.0, -j - 2);
        double hi = std::ldexp(1.0, -j - 1);
        std::array<double, deg + 1> f{};
        for (int q = 0; q <= deg; ++q) {
            double u = std::cos(PI * q / deg);
            double x = 0.5 * (lo + hi) + 0.5 * (hi - lo) * u;
            f[q] = omega_and_prime(params, x).omega_prime;
        }
        for (int m = 0; m <= deg; ++m) {
            CompensatedSum s;
            s.add(0.5 * f[0]);
            for (int q = 1; q < deg; ++q)
                s.add(f[q] * std::cos(PI * q * m / deg));
            s.add(0.5 * f[deg] * ((m % 2 == 0) ? 1.0 : -1.0));
            double c = 2.0 / deg * s.value();
            if (m == 0 || m == deg) c *= 0.5;
            coef_[j][m] = c;
        }
    }
}

double OmegaPrimeTable::operator()(double k) const {
    double a = std::abs(k);
    if (a == 0.0) throw DegenerateState("OmegaPrimeTable: k = 0");
    int e;
    std::frexp(a, &e);
    int j = -e - 1;  // octave [2^(-j-2), 2^(-j-1)] contains a
    if (j < 0) j = 0;
    if (j >= n_oct_) {  // below the table: clamp to the bottom edge
        j = n_oct_ - 1;
        a = std::ldexp(1.0, -j - 2);
    }
    double u = 2.0 * a * std::ldexp(1.0, j + 2) - 3.0;
    const auto& c = coef_[j];
    double d1 = 0.0, d2 = 0.0;
    for (int m = 16; m >= 1; --m) {
        double d = 2.0 * u * d1 - d2 + c[m];
        d2 = d1;
        d1 = d;
    }
    double v = u * d1 - d2 + c[0];
    return k < 0.0 ? -v : v;
}

const OmegaPrimeTable& omega_prime_table(const ModelParams& params) {
    static std::mutex mu;
    static std::map<double, std::unique_ptr<OmegaPrimeTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(params.theta);
    if (it == cache.end()) {
        it = cache
                 .emplace(params.theta,
                          std::make_unique<OmegaPrimeTable>(params))
                 .first;
    }
    return *it->second;
}

double n_scaling(const ModelParams& params, double N) {
    params.require_theta_above_2("n_scaling");
    if (!(N > 1.0)) throw DomainError("n_scaling: N must be > 1");
    if (params.theta < 3.0) return std::pow(N, (7.0 - params.theta) / 6.0);
    double base = std::pow(N, 2.0 / 3.0);
    if (params.theta == 3.0) return std::sqrt(std::log(N) / 3.0) * base;
    return base;
}

double mixture_weight(double k) {
    double e1 = e_basis(1, k);
    double e2 = e_basis(2, k);
    return e1 / (e1 + e2);
}

double sample_next_k(const ModelParams& params, double k, RngStream& rng,
                     StepCounters* counters) {
    params.validate();
    if (k == 0.0)
        throw DegenerateState("sample_next_k: k = 0 has no jump kernel");
    return next_k_impl(k, rng, counters);
}

double holding_time(const ModelParams& params, double k, RngStream& rng) {
    return holding_impl(params.gamma0, k, rng);
}

double sample_pi(RngStream& rng) { return sample_pi_impl(rng); }

JumpTrajectory simulate_trajectory(const ModelParams& params, double k0,
                                   double horizon, RngStream& rng) {
    double k = validated_start(params, k0, horizon, "simulate_trajectory");
    JumpTrajectory tr;
    tr.states = {k};
    tr.jump_times = {0.0};
    flight_core(params, omega_prime_table(params), k, 0.0, 0.0, horizon, rng,
                &tr);
    return tr;
}

void resume_trajectory(const ModelParams& params, JumpTrajectory& trajectory,
                       double new_horizon, RngStream& rng) {
    params.validate();
    params.require_theta_above_2("resume_trajectory");
    if (trajectory.states.empty() || trajectory.jump_times.empty())
        throw DegenerateState("resume_trajectory: empty trajectory");
    if (!(new_horizon > trajectory.horizon))
        throw DomainError(
            "resume_trajectory: new horizon must exceed the current one");
    flight_core(params, omega_prime_table(params), trajectory.states.back(),
                trajectory.jump_times.back(), trajectory.z_at_last_jump,
                new_horizon, rng, &trajectory);
}

FlightSample flight(const ModelParams& params, double k0, double horizon,
                    RngStream& rng) {
    double k = validated_start(params, k0, horizon, "flight");
    return flight_core(params, omega_prime_table(params), k, 0.0, 0.0,
                       horizon, rng, nullptr);
}

double tail_statistic(const ModelParams& params, double N, double lambda) {
    params.validate();
    params.require_theta_above_2("tail_statistic");
    if (!(lambda > 0.0))
        throw DomainError("tail_statistic: lambda must be > 0");
    double x = n_scaling(params, N) * lambda;  // threshold for omega'/(2gR)
    auto g = [&](double k) {
        return omega_and_prime(params, k).omega_prime /
               (2.0 * params.gamma0 * R_mean(k));
    };
    // g > 0 only on (0, 1/2): scan a log grid for sign changes of g - x,
    // refine each crossing by bisection, and measure the exceedance
    // intervals with the exact antiderivative of R.
    const int n_scan = 2048;
    const double k_min = 1e-18;
    std::vector<double> nodes(n_scan);
    for (int i = 0; i < n_scan; ++i)
        nodes[i] = 0.5 * std::pow(k_min / 0.5,
                                  1.0 - static_cast<double>(i) / (n_scan - 1));
    auto refine = [&](double a, double b) {
        for (int it = 0; it < 200; ++it) {
            double m = 0.5 * (a + b);
            if (m == a || m == b) break;
            if (g(m) > x)
                a = m;
            else
                b = m;
        }
        return 0.5 * (a + b);
    };
    CompensatedSum measure;
    bool above = g(nodes[0]) > x;
    double seg_start = above ? 0.0 : -1.0;  // exceedance extends down to 0
    for (int i = 1; i < n_scan; ++i) {
        bool now = g(nodes[i]) > x;
        if (now == above) continue;
        double c = refine(above ? nodes[i - 1] : nodes[i],
                          above ? nodes[i] : nodes[i - 1]);
        if (above) {
            measure.add((2.0 / 3.0) * R_mean_integral(seg_start, c));
            seg_start = -1.0;
        } else {
            seg_start = c;
        }
        above = now;
    }
    if (above)
        measure.add((2.0 / 3.0) * R_mean_integral(seg_start, 0.5));
    return N * measure.value();
}

std::vector<double> sample_scaled_flights(const ModelParams& params, double N,
                                          double t, std::size_t n_samples,
                                          std::uint64_t seed) {
    params.validate();
    params.require_theta_above_2("sample_scaled_flights");
    if (!(t > 0.0)) throw DomainError("sample_scaled_flights: t must be > 0");
    if (n_samples == 0)
        throw DomainError("sample_scaled_flights: need n_samples >= 1");
    const OmegaPrimeTable& wp = omega_prime_table(params);
    double horizon = N * t;
    double scale = n_scaling(params, N);
    std::vector<double> out(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        RngStream rng(seed, i);
        double k0 = sample_pi_impl(rng);
        out[i] =
            flight_core(params, wp, k0, 0.0, 0.0, horizon, rng, nullptr).z /
            scale;
    }
    return out;
}

namespace {

struct CfPoint {
    double p = 0.0;
    double neg_log_mod = 0.0;
    double im_sigmas = 0.0;
    bool usable = false;
};

CfPoint cf_at(const std::vector<double>& z, double p) {
    CompensatedSum sc, ss, ss2;
    for (double v : z) {
        double s = std::sin(p * v);
        sc.add(std::cos(p * v));
        ss.add(s);
        ss2.add(s * s);
    }
    double n = static_cast<double>(z.size());
    double re = sc.value() / n;
    double im = ss.value() / n;
    CfPoint pt;
    pt.p = p;
    double mod = std::hypot(re, im);
    if (mod > 0.0 && mod < 1.0) {
        pt.neg_log_mod = -std::log(mod);
        pt.usable = true;
    }
    double var = (ss2.value() - n * im * im) / (n - 1.0);
    double se = std::sqrt(std::max(var, 0.0) / n);
    pt.im_sigmas = se > 0.0 ? std::abs(im) / se : 0.0;
    return pt;
}

}  // namespace

CfFit fit_cf_window(const std::vector<double>& z, double t, double p_lo,
                    double p_hi) {
    if (z.size() < 16) throw FitDegenerate("fit_cf_window: too few samples");
    if (!(t > 0.0 && p_lo > 0.0 && p_hi > p_lo))
        throw DomainError("fit_cf_window: need t > 0 and 0 < p_lo < p_hi");
    const int n_nodes = 25;
    std::vector<double> xs, ys;
    double im_max = 0.0;
    for (int i = 0; i < n_nodes; ++i) {
        double p = p_lo * std::pow(p_hi / p_lo,
                                   static_cast<double>(i) / (n_nodes - 1));
        CfPoint pt = cf_at(z, p);
        if (!pt.usable || pt.neg_log_mod <= 0.0) continue;
        xs.push_back(std::log(p));
        ys.push_back(std::log(pt.neg_log_mod));
        im_max = std::max(im_max, pt.im_sigmas);
    }
    if (xs.size() < 5)
        throw FitDegenerate("fit_cf_window: too few usable nodes");
    LinearFit lf = linear_fit(xs, ys);
    CfFit fit;
    fit.exponent = lf.slope;
    fit.coefficient = std::exp(lf.intercept) / t;
    fit.slope_stderr = lf.slope_stderr;
    fit.r_squared = lf.r_squared;
    fit.im_max_sigmas = im_max;
    fit.window_lo = p_lo;
    fit.window_hi = p_hi;
    fit.n_points = xs.size();
    return fit;
}

CfFit fit_cf(const std::vector<double>& z, double t) {
    if (z.size() < 16) throw FitDegenerate("fit_cf: too few samples");
    std::vector<double> mags(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) mags[i] = std::abs(z[i]);
    std::nth_element(mags.begin(), mags.begin() + mags.size() / 2,
                     mags.end());
    double med = mags[mags.size() / 2];
    if (!(med > 0.0)) throw FitDegenerate("fit_cf: degenerate sample scale");
    double pc = 1.0 / med;
    // Wide scan to locate the band 0.1 <= -log|phi| <= 2, then one decade
    // log-centered on it.
    const int n_scan = 97;
    double lo_seen = 0.0, hi_seen = 0.0;
    for (int i = 0; i < n_scan; ++i) {
        double p = pc * std::pow(10.0, -2.0 + 4.0 * i / (n_scan - 1));
        CfPoint pt = cf_at(z, p);
        if (!pt.usable) continue;
        if (pt.neg_log_mod < 0.1 || pt.neg_log_mod > 2.0) continue;
        if (lo_seen == 0.0) lo_seen = p;
        hi_seen = p;
    }
    if (lo_seen == 0.0 || hi_seen <= lo_seen)
        throw FitDegenerate("fit_cf: empty characteristic-function band");
    double center = std::sqrt(lo_seen * hi_seen);
    double half = std::sqrt(10.0);
    double w_lo = std::max(lo_seen, center / half);
    double w_hi = std::min(hi_seen, center * half);
    return fit_cf_window(z, t, w_lo, w_hi);
}

LevyEstimate estimate_stable_exponent(const ModelParams& params, double N,
                                      double t, std::size_t n_samples,
                                      std::uint64_t seed) {
    if (n_samples < 10000)
        throw DomainError(
            "estimate_stable_exponent: needs n_samples >= 10000");
    std::vector<double> z = sample_scaled_flights(params, N, t, n_samples,
                                                  seed);
    CfFit fit = fit_cf(z, t);
    if (fit.r_squared < 0.9)
        throw FitDegenerate("estimate_stable_exponent: R^2 = " +
                            std::to_string(fit.r_squared) + " < 0.9");
    if (!(fit.exponent > 0.0 && fit.exponent <= 2.0))
        throw FitDegenerate("estimate_stable_exponent: index " +
                            std::to_string(fit.exponent) +
                            " outside (0, 2]");
    LevyEstimate est;
    est.theta = params.theta;
    est.exponent_fit = fit.exponent;
    est.coefficient_fit = fit.coefficient;
    est.std_error = fit.slope_stderr;
    est.n_samples = n_samples;
    est.n_time = N;
    est.r_squared = fit.r_squared;
    est.im_max_sigmas = fit.im_max_sigmas;
    return est;
}

double bump_function(double lambda, double y_star, double r, double y) {
    if (!(r > 0.0)) throw DomainError("bump_function: r must be > 0");
    if (lambda < 0.0) throw DomainError("bump_function: lambda must be >= 0");
    double d = y - y_star;
    double q = r * r - d * d;
    if (q <= 0.0) return 0.0;
    return std::exp(-lambda / q);
}

BoltzmannField solve_boltzmann_mc(
    const ModelParams& params,
    const std::function<double(double, double)>& u0, double t,
    const std::vector<double>& y_grid, const std::vector<double>& k_grid,
    std::size_t n_samples, std::uint64_t seed) {
    params.validate();
    params.require_theta_above_2("solve_boltzmann_mc");
    if (t < 0.0) throw DomainError("solve_boltzmann_mc: t must be >= 0");
    if (y_grid.empty() || k_grid.empty())
        throw GridMismatch("solve_boltzmann_mc: empty grid");
    if (n_samples == 0)
        throw DomainError("solve_boltzmann_mc: need n_samples >= 1");
    const OmegaPrimeTable& wp = omega_prime_table(params);
    BoltzmannField out;
    out.y_grid = y_grid;
    out.k_grid = k_grid;
    out.values.assign(y_grid.size() * k_grid.size(), 0.0);
    out.std_errors.assign(y_grid.size() * k_grid.size(), 0.0);
    std::vector<double> zs(n_samples), ks(n_samples);
    for (std::size_t ki = 0; ki < k_grid.size(); ++ki) {
        double kr = reduce_torus(k_grid[ki]);
        if (kr == 0.0)
            throw DegenerateState("solve_boltzmann_mc: k grid node at 0");
        double k0 = clamp_k(kr);
        for (std::size_t i = 0; i < n_samples; ++i) {
            if (t == 0.0) {
                zs[i] = 0.0;
                ks[i] = k0;
            } else {
                RngStream rng(seed, ki * n_samples + i);
                FlightSample fs =
                    flight_core(params, wp, k0, 0.0, 0.0, t, rng, nullptr);
                zs[i] = fs.z;
                ks[i] = fs.k_end;
            }
        }
        for (std::size_t yi = 0; yi < y_grid.size(); ++yi) {
            CompensatedSum s, s2;
            for (std::size_t i = 0; i < n_samples; ++i) {
                double v = u0(y_grid[yi] + zs[i], ks[i]);
                s.add(v);
                s2.add(v * v);
            }
            double n = static_cast<double>(n_samples);
            double mean = s.value() / n;
            double var =
                n > 1.0 ? std::max(0.0, (s2.value() - n * mean * mean) /
                                            (n - 1.0))
                        : 0.0;
            out.values[yi * k_grid.size() + ki] = mean;
            out.std_errors[yi * k_grid.size() + ki] = std::sqrt(var / n);
        }
    }
    return out;
}

RescaledUN rescaled_uN(const ModelParams& params,
                       const std::function<double(double, double)>& u0,
                       double N, double t, double y,
                       const std::vector<double>& k_grid,
                       std::size_t n_samples, std::uint64_t seed) {
    params.validate();
    params.require_theta_above_2("rescaled_uN");
    if (!(t > 0.0)) throw DomainError("rescaled_uN: t must be > 0");
    if (k_grid.empty()) throw GridMismatch("rescaled_uN: empty k grid");
    if (n_samples < 2) throw DomainError("rescaled_uN: need n_samples >= 2");
    const OmegaPrimeTable& wp = omega_prime_table(params);
    double horizon = N * t;
    double scale = n_scaling(params, N);
    RescaledUN out;
    out.k_values.resize(k_grid.size());
    CompensatedSum avg_sum, var_sum;
    for (std::size_t ki = 0; ki < k_grid.size(); ++ki) {
        double kr = reduce_torus(k_grid[ki]);
        if (kr == 0.0)
            throw DegenerateState("rescaled_uN: k grid node at 0");
        double k0 = clamp_k(kr);
        CompensatedSum s, s2;
        for (std::size_t i = 0; i < n_samples; ++i) {
            RngStream rng(seed, ki * n_samples + i);
            FlightSample fs =
                flight_core(params, wp, k0, 0.0, 0.0, horizon, rng, nullptr);
            double v = u0(y + fs.z / scale, fs.k_end);
            s.add(v);
            s2.add(v * v);
        }
        double n = static_cast<double>(n_samples);
        double mean = s.value() / n;
        double var =
            std::max(0.0, (s2.value() - n * mean * mean) / (n - 1.0));
        out.k_values[ki] = mean;
        avg_sum.add(mean);
        var_sum.add(var / n);
    }
    double nk = static_cast<double>(k_grid.size());
    out.k_average = avg_sum.value() / nk;
    CompensatedSum dev;
    for (double v : out.k_values)
        dev.add((v - out.k_average) * (v - out.k_average));
    out.deficit_raw = dev.value() / nk;
    out.mean_variance = var_sum.value() / nk;
    out.deficit = out.deficit_raw - (1.0 - 1.0 / nk) * out.mean_variance;
    return out;
}

std::string estimator_csv_header() {
    return "theta,gamma0,N,t,statistic,value,stderr,n_samples,seed";
}

std::string to_csv(const EstimatorRow& row) {
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "%.17g,%.17g,%.17g,%.17g,%s,%.17g,%.17g,%zu,%llu",
                  row.theta, row.gamma0, row.N, row.t, row.statistic.c_str(),
                  row.value, row.std_error, row.n_samples,
                  static_cast<unsigned long long>(row.seed));
    return buf;
}

}  // namespace lrchain
