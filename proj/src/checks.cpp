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

#include "lrchain/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lrchain/chain_sim.hpp"
#include "lrchain/dispersion.hpp"
#include "lrchain/frac_pde.hpp"
#include "lrchain/kinetic_mc.hpp"
#include "lrchain/params.hpp"
#include "lrchain/resolvent.hpp"
#include "lrchain/rng.hpp"
#include "lrchain/scattering.hpp"
#include "lrchain/stats.hpp"

namespace lrchain {

namespace {

template <typename... Args>
std::string fmt(const char* f, Args... args) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), f, args...);
    return std::string(buf);
}

struct Body {
    bool pass = true;
    std::string detail;
};

/// theta sweeps honor the filter only when the filter is a sweep member;
/// sweeps not containing it run unchanged.
std::vector<double> sweep_theta(const CheckOptions& options,
                                std::vector<double> full) {
    if (options.theta_filter > 0.0) {
        for (double th : full)
            if (std::abs(th - options.theta_filter) < 1e-12)
                return {options.theta_filter};
    }
    return full;
}

ModelParams make_params(double theta, double gamma0 = 1.0) {
    ModelParams p;
    p.theta = theta;
    p.gamma0 = gamma0;
    return p;
}

double uniform_sym(RngStream& rng) { return rng.uniform() - 0.5; }

// -------------------------------------------------------------------------
// 01: rank-two factorization of the jump kernel, and the two evaluation
// routes of the p-shifted kernel, both over random draws.
Body check_01(const CheckOptions& o) {
    const double tol = 1e-12;
    RngStream pairs(o.seed, 101);
    double dev_rank2 = 0.0;
    for (int i = 0; i < 10000; ++i) {
        double k = uniform_sym(pairs);
        double kp = uniform_sym(pairs);
        double rank2 = 0.75 * (e_basis(1, k) * e_basis(2, kp) +
                               e_basis(2, k) * e_basis(1, kp));
        dev_rank2 = std::max(dev_rank2, std::abs(R_pair(k, kp) - rank2));
    }
    RngStream triples(o.seed, 102);
    double dev_p = 0.0;
    for (int i = 0; i < 10000; ++i) {
        double k = uniform_sym(triples);
        double kp = uniform_sym(triples);
        double p = uniform_sym(triples);
        dev_p = std::max(dev_p, std::abs(R_p_kernel(k, kp, p) -
                                         R_p_kernel_sum(k, kp, p)));
    }
    Body b;
    b.pass = dev_rank2 <= tol && dev_p <= tol;
    b.detail = fmt("rank-2 max dev %.2e, p-kernel max dev %.2e (tol %.0e)",
                   dev_rank2, dev_p, tol);
    return b;
}

// -------------------------------------------------------------------------
// 02: marginal of the kernel against its closed form, and unit mass of the
// factor functions (rectangle rule is exact for these trigonometric
// polynomials, so the comparison is pure arithmetic).
Body check_02(const CheckOptions&) {
    const std::size_t nq = 256;
    double dev_marg = 0.0;
    for (int i = 0; i <= 200; ++i) {
        double k = -0.5 + static_cast<double>(i) / 200.0;
        double acc = 0.0;
        for (std::size_t j = 0; j < nq; ++j) {
            double kp = -0.5 + static_cast<double>(j) / nq;
            acc += R_pair(k, kp);
        }
        acc /= static_cast<double>(nq);
        dev_marg = std::max(dev_marg, std::abs(acc - R_mean(k)));
    }
    double dev_mass = 0.0;
    for (int i = 1; i <= 2; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < nq; ++j)
            acc += e_basis(i, -0.5 + static_cast<double>(j) / nq);
        acc /= static_cast<double>(nq);
        dev_mass = std::max(dev_mass, std::abs(acc - 1.0));
        dev_mass = std::max(dev_mass,
                            std::abs(e_basis_integral(i, -0.5, 0.5) - 1.0));
    }
    Body b;
    b.pass = dev_marg <= 1e-10 && dev_mass <= 1e-12;
    b.detail = fmt("marginal max dev %.2e (tol 1e-10), factor mass dev %.2e "
                   "(tol 1e-12)",
                   dev_marg, dev_mass);
    return b;
}

// -------------------------------------------------------------------------
// 03: small-k leading term of the symbol along a dyadic ladder. The theta=3
// part is split out: its correction decays like 1/log(1/k) and sits just
// above the 2% gate at the end of the pinned ladder; it runs unmodified and
// reports the measured error.
Body check_03(const CheckOptions& o, bool theta3_part) {
    std::vector<double> thetas =
        theta3_part ? std::vector<double>{3.0}
                    : sweep_theta(o, {2.5, 4.0});
    Body b;
    double worst = 0.0;
    for (double theta : thetas) {
        ModelParams p = make_params(theta);
        const double C = C_theta(p);
        double rel_final = 0.0;
        for (int j = 4; j <= 20; ++j) {
            double k = std::ldexp(1.0, -j);
            double lead;
            if (theta < 3.0)
                lead = C * std::pow(k, theta - 1.0);
            else if (theta == 3.0)
                lead = C * k * k * std::log(1.0 / k);
            else
                lead = C * k * k;
            rel_final = std::abs(a_hat(p, k) / lead - 1.0);
        }
        worst = std::max(worst, rel_final);
        if (rel_final > 0.02) b.pass = false;
    }
    b.detail = fmt("max rel dev %.4f at the ladder end (tol 0.02)", worst);
    if (theta3_part && !b.pass)
        b.detail += "; the log-order correction has not yet left the gate";
    return b;
}

// -------------------------------------------------------------------------
// 04: rescaled dispersion difference quotient against its closed-form
// limit, at the smallest epsilon of a per-theta ladder.
Body check_04(const CheckOptions& o) {
    struct Regime {
        double theta;
        std::vector<double> ks;
        std::vector<double> epss;
    };
    const std::vector<Regime> regimes = {
        {2.5, {0.1, 0.25, 0.4}, {1e-5, 1e-6, 1e-7}},
        {3.0, {0.2, 0.25, 0.3, 0.35}, {1e-6, 1e-8, 1e-10}},
        {4.0, {0.1, 0.25, 0.4}, {1e-4, 1e-5, 1e-6}},
    };
    std::vector<double> thetas = sweep_theta(o, {2.5, 3.0, 4.0});
    Body b;
    double worst = 0.0;
    for (const Regime& r : regimes) {
        if (std::find(thetas.begin(), thetas.end(), r.theta) == thetas.end())
            continue;
        ModelParams p = make_params(r.theta);
        for (double k : r.ks) {
            double limit = delta_eps_omega_rescaled_limit(p, k);
            double rel = 0.0;
            for (double eps : r.epss)
                rel = std::abs(delta_eps_omega_rescaled(p, eps, 1.0, k) /
                                   limit -
                               1.0);
            worst = std::max(worst, rel);
            if (rel > 0.03) b.pass = false;
        }
    }
    b.detail = fmt("max rel dev %.4f at the smallest eps (tol 0.03)", worst);
    return b;
}

// -------------------------------------------------------------------------
// 05: closed forms of the auxiliary integrals against their quadrature
// routes, and the cosecant-argument reduction used by the coefficient.
Body check_05(const CheckOptions&) {
    Body b;
    double dev_res = 0.0;
    for (double tau : {0.0, 0.3, 0.6, 0.9})
        dev_res = std::max(dev_res, std::abs(residue_integral(tau) -
                                             residue_integral_quadrature(tau)));
    double dev_sin = 0.0;
    for (double a : {1.25, 4.0 / 3.0, 1.5})
        dev_sin = std::max(dev_sin, std::abs(sine_integral(a) -
                                             sine_integral_quadrature(a)));
    double dev_csc = 0.0;
    for (double theta = 2.05; theta <= 3.0 + 1e-9; theta += 0.05) {
        double lhs = 3.0 * (3.0 - theta) / (4.0 * (7.0 - theta)) + 0.25;
        double rhs = (4.0 - theta) / (7.0 - theta);
        dev_csc = std::max(dev_csc, std::abs(1.0 / std::sin(PI * lhs) -
                                             1.0 / std::sin(PI * rhs)));
    }
    b.pass = dev_res <= 1e-8 && dev_sin <= 1e-6 && dev_csc <= 1e-12;
    b.detail = fmt("residue dev %.2e (tol 1e-8), sine dev %.2e (tol 1e-6), "
                   "csc dev %.2e (tol 1e-12)",
                   dev_res, dev_sin, dev_csc);
    return b;
}

// -------------------------------------------------------------------------
// 06: the macroscopic coefficient along its two independent routes.
Body check_06(const CheckOptions& o) {
    Body b;
    double worst = 0.0;
    for (double theta : sweep_theta(o, {2.2, 2.5, 2.8, 3.0, 3.5, 4.0, 6.0})) {
        for (double g : {0.5, 1.0, 2.0}) {
            ModelParams p = make_params(theta, g);
            double big = C_big(p);
            double rel = std::abs(c_small(p) / big - 1.0);
            worst = std::max(worst, rel);
            if (rel > 1e-10) b.pass = false;
        }
    }
    b.detail = fmt("max rel dev %.2e over the theta x gamma0 grid "
                   "(tol 1e-10)",
                   worst);
    return b;
}

// -------------------------------------------------------------------------
// 07: Laplace-frame coefficient converging onto lambda + C |p|^alpha, and
// the p-ratio exponent in the slow-decay regime.
Body check_07(const CheckOptions&) {
    Body b;
    ModelParams p4 = make_params(4.0);
    const double C4 = C_big(p4);
    const double lambda = 1.0;
    double worst_rel = 0.0;
    bool monotone = true;
    for (double p : {1.0, 2.0}) {
        double target = C4 * std::pow(p, 1.5);
        double prev = 0.0;
        double err = 0.0;
        for (int j = 2; j <= 6; ++j) {
            double eps = std::pow(10.0, -j);
            err = std::abs(a_eps(p4, eps, p, lambda) - lambda - target);
            if (j > 2 && err >= prev) monotone = false;
            prev = err;
        }
        worst_rel = std::max(worst_rel, err / target);
    }
    ModelParams p25 = make_params(2.5);
    const double eps_star = 1e-6;
    double ratio = (a_eps(p25, eps_star, 2.0, lambda) - lambda) /
                   (a_eps(p25, eps_star, 1.0, lambda) - lambda);
    double exponent = std::log2(ratio);
    double exp_rel = std::abs(exponent / (4.0 / 3.0) - 1.0);
    b.pass = monotone && worst_rel <= 0.02 && exp_rel <= 0.03;
    b.detail = fmt("deviation %s, final rel %.4f (tol 0.02); p-ratio "
                   "exponent %.4f vs 4/3 (tol 0.03)",
                   monotone ? "decreasing" : "NOT decreasing", worst_rel,
                   exponent);
    return b;
}

// -------------------------------------------------------------------------
// 08: the jump chain itself: next-state law by chi-square, stationarity of
// the embedded measure by KS, reversibility by the 2-d symmetry statistic.
Body check_08(const CheckOptions& o) {
    Body b;
    ModelParams p = make_params(4.0);

    // Next-state chi-square at a fixed source wavenumber.
    const double k0 = 0.2;
    const int n_draw = 1000000;
    const int n_bins = 64;
    std::vector<double> counts(n_bins, 0.0), expected(n_bins, 0.0);
    RngStream rng1(o.seed, 801);
    for (int i = 0; i < n_draw; ++i) {
        double kp = sample_next_k(p, k0, rng1);
        int bin = static_cast<int>((kp + 0.5) * n_bins);
        bin = std::clamp(bin, 0, n_bins - 1);
        counts[bin] += 1.0;
    }
    const double rk0 = R_mean(k0);
    for (int bn = 0; bn < n_bins; ++bn) {
        double a = -0.5 + static_cast<double>(bn) / n_bins;
        double c = a + 1.0 / n_bins;
        double prob = 0.75 *
                      (e_basis(1, k0) * e_basis_integral(2, a, c) +
                       e_basis(2, k0) * e_basis_integral(1, a, c)) /
                      rk0;
        expected[bn] = prob * n_draw;
    }
    // Pool adjacent bins until every group expects at least 10 counts.
    double chi2 = 0.0;
    int groups = 0;
    double ce = 0.0, cc = 0.0;
    for (int bn = 0; bn < n_bins; ++bn) {
        ce += expected[bn];
        cc += counts[bn];
        if (ce >= 10.0) {
            chi2 += (cc - ce) * (cc - ce) / ce;
            ++groups;
            ce = cc = 0.0;
        }
    }
    if (ce > 0.0 && groups > 0) {
        chi2 += (cc - ce) * (cc - ce) / ce;  // remainder joins as one group
        ++groups;
    }
    double p_next = chi2_pvalue(chi2, groups - 1);

    // Stationarity of the embedded chain: a pi draw followed by one jump.
    const int n_stat = 200000;
    std::vector<double> after(n_stat);
    RngStream rng2(o.seed, 802);
    for (int i = 0; i < n_stat; ++i)
        after[i] = sample_next_k(p, sample_pi(rng2), rng2);
    double d_stat = ks_statistic(after, [](double x) {
        return (2.0 / 3.0) * R_mean_integral(-0.5, x);
    });

    // Reversibility: symmetry of the pair histogram.
    const int n_pair = 1000000;
    const int m = 20;
    std::vector<double> h(m * m, 0.0);
    RngStream rng3(o.seed, 803);
    for (int i = 0; i < n_pair; ++i) {
        double a = sample_pi(rng3);
        double c = sample_next_k(p, a, rng3);
        int ia = std::clamp(static_cast<int>((a + 0.5) * m), 0, m - 1);
        int ic = std::clamp(static_cast<int>((c + 0.5) * m), 0, m - 1);
        h[ia * m + ic] += 1.0;
    }
    double chi2_rev = 0.0;
    int dof_rev = 0;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            double t = h[i * m + j] + h[j * m + i];
            if (t < 10.0) continue;
            double d = h[i * m + j] - h[j * m + i];
            chi2_rev += d * d / t;
            ++dof_rev;
        }
    }
    double p_rev = chi2_pvalue(chi2_rev, dof_rev);

    b.pass = p_next > 0.01 && d_stat <= 0.01 && p_rev > 0.01;
    b.detail = fmt("next-state p %.3f, stationarity KS %.4f (tol 0.01), "
                   "reversibility p %.3f",
                   p_next, d_stat, p_rev);
    return b;
}

// -------------------------------------------------------------------------
// 09: tail law of the exceedance statistic: lambda-exponent and prefactor,
// plus the gamma0 scaling of the prefactor.
Body check_09(const CheckOptions& o) {
    Body b;
    std::vector<double> lnl(9), lam(9);
    for (int i = 0; i < 9; ++i) {
        lam[i] = 0.5 * std::pow(10.0, i / 8.0);
        lnl[i] = std::log(lam[i]);
    }
    auto fit_tail = [&](const ModelParams& p, double N, double& slope,
                        double& pref) {
        std::vector<double> lnt(9);
        for (int i = 0; i < 9; ++i)
            lnt[i] = std::log(tail_statistic(p, N, lam[i]));
        LinearFit f = linear_fit(lnl, lnt);
        slope = f.slope;
        pref = std::exp(f.intercept);
    };
    double worst_slope = 0.0, worst_pref = 0.0;
    for (double theta : sweep_theta(o, {2.2, 2.5, 3.0, 4.0})) {
        ModelParams p = make_params(theta);
        double alpha = stable_index(p);
        double N = (theta == 3.0) ? 1e18 : 1e8;
        double slope, pref;
        fit_tail(p, N, slope, pref);
        double tol_slope = (theta == 3.0) ? 0.10 : 0.05;
        double rel_slope = std::abs(-slope / alpha - 1.0);
        double rel_pref = std::abs(pref / C_star(p) - 1.0);
        worst_slope = std::max(worst_slope, rel_slope);
        worst_pref = std::max(worst_pref, rel_pref);
        if (rel_slope > tol_slope || rel_pref > 0.10) b.pass = false;
    }
    // gamma0 scaling of the prefactor at a fixed theta.
    {
        ModelParams p = make_params(2.5, 2.0);
        double alpha = stable_index(p);
        double slope, pref;
        fit_tail(p, 1e8, slope, pref);
        double target = C_star(p) * std::pow(2.0, -alpha);
        double rel = std::abs(pref / target - 1.0);
        worst_pref = std::max(worst_pref, rel);
        if (rel > 0.10) b.pass = false;
    }
    b.detail = fmt("max exponent rel %.4f (tol 0.05; 0.10 at the log-"
                   "corrected point), max prefactor rel %.4f (tol 0.10)",
                   worst_slope, worst_pref);
    return b;
}

// -------------------------------------------------------------------------
// 10: stable index and coefficient fitted from the characteristic function
// of the scaled flights.
Body check_10(const CheckOptions& o) {
    Body b;
    std::string parts;
    int idx = 0;
    for (double theta : sweep_theta(o, {4.0, 2.5})) {
        ModelParams p = make_params(theta);
        double alpha = stable_index(p);
        LevyEstimate est = estimate_stable_exponent(p, 1e4, 1.0, 100000,
                                                    o.seed + idx);
        ++idx;
        double rel_exp = std::abs(est.exponent_fit / alpha - 1.0);
        double rel_coef = std::abs(est.coefficient_fit / C_big(p) - 1.0);
        if (rel_exp > 0.10 || rel_coef > 0.25 || est.im_max_sigmas > 3.0)
            b.pass = false;
        parts += fmt("%stheta %.1f: index %.4f (rel %.3f, tol 0.10), coef "
                     "rel %.3f (tol 0.25), im %.2f sigma",
                     parts.empty() ? "" : "; ", theta, est.exponent_fit,
                     rel_exp, rel_coef, est.im_max_sigmas);
    }
    b.detail = parts;
    return b;
}

// -------------------------------------------------------------------------
// 11: homogenization: the k-variance deficit shrinks along N, and the
// k-average lands on the fractional-heat reference profile.
Body check_11(const CheckOptions& o) {
    Body b;
    ModelParams p = make_params(4.0);
    auto u0 = [](double y, double k) {
        return bump_function(1.0, 0.0, 2.0, y) *
               (1.0 + 0.5 * std::cos(2.0 * PI * k));
    };
    const std::size_t nk = 48;
    std::vector<double> k_grid(nk);
    for (std::size_t i = 0; i < nk; ++i)
        k_grid[i] = (static_cast<double>(i) + 0.5) / nk - 0.5;
    const double t = 1.0;
    const std::size_t n_samples = 1200;

    double d2 = rescaled_uN(p, u0, 1e2, t, 0.0, k_grid, n_samples, o.seed + 1)
                    .deficit;
    double d3 = rescaled_uN(p, u0, 1e3, t, 0.0, k_grid, n_samples, o.seed + 2)
                    .deficit;

    // N = 1e4: one flight ensemble reused for the deficit at y = 0 and for
    // the whole profile, with the same per-node stream layout as
    // rescaled_uN so the deficit is the one that call would produce.
    const double N = 1e4;
    const double scale = n_scaling(p, N);
    std::vector<double> y_nodes(33);
    for (int i = 0; i < 33; ++i) y_nodes[i] = -8.0 + 0.5 * i;
    std::vector<double> node_mean(nk, 0.0), node_sq(nk, 0.0);
    std::vector<double> profile(y_nodes.size(), 0.0);
    for (std::size_t ki = 0; ki < nk; ++ki) {
        std::vector<double> zs(n_samples), ke(n_samples);
        for (std::size_t i = 0; i < n_samples; ++i) {
            RngStream rng(o.seed + 3, ki * n_samples + i);
            FlightSample fs = flight(p, k_grid[ki], N * t, rng);
            zs[i] = fs.z / scale;
            ke[i] = fs.k_end;
        }
        double s0 = 0.0, s2 = 0.0;
        for (std::size_t i = 0; i < n_samples; ++i) {
            double v = u0(zs[i], ke[i]);
            s0 += v;
            s2 += v * v;
        }
        double mean = s0 / n_samples;
        node_mean[ki] = mean;
        node_sq[ki] = (s2 - n_samples * mean * mean) / (n_samples - 1.0) /
                      n_samples;
        for (std::size_t yi = 0; yi < y_nodes.size(); ++yi) {
            double acc = 0.0;
            for (std::size_t i = 0; i < n_samples; ++i)
                acc += u0(y_nodes[yi] + zs[i], ke[i]);
            profile[yi] += acc / n_samples / static_cast<double>(nk);
        }
    }
    double avg = 0.0;
    for (double v : node_mean) avg += v;
    avg /= static_cast<double>(nk);
    double raw = 0.0, mv = 0.0;
    for (std::size_t ki = 0; ki < nk; ++ki) {
        raw += (node_mean[ki] - avg) * (node_mean[ki] - avg);
        mv += node_sq[ki];
    }
    raw /= static_cast<double>(nk);
    mv /= static_cast<double>(nk);
    double d4 = raw - (1.0 - 1.0 / static_cast<double>(nk)) * mv;

    const double kappa = std::pow(2.0 * PI, 1.5) * C_big(p);
    FracField ref = field_from_function(128.0, 4096, 1.5, kappa, [](double y) {
        return bump_function(1.0, 0.0, 2.0, y);
    });
    std::vector<double> uref = to_real_space(evolve(ref, t), y_nodes);
    double l2 = compare_l2(profile, uref, 0.5);

    b.pass = d2 > d3 && d3 > d4 && l2 <= 0.05;
    b.detail = fmt("deficits %.3e > %.3e > %.3e along N, L2 distance %.4f "
                   "(tol 0.05)",
                   d2, d3, d4, l2);
    if (!(d2 > d3 && d3 > d4)) b.detail += "; deficit not decreasing";
    return b;
}

// -------------------------------------------------------------------------
// 12: conservation of energy and momentum under the splitting integrator,
// and stationarity of the Gibbs measure under the full dynamics.
Body check_12(const CheckOptions& o) {
    Body b;
    const std::size_t n = o.quick ? 256 : 1024;
    const std::size_t steps = o.quick ? 1000 : 10000;
    const double temperature = 1.0;
    std::vector<double> thetas =
        o.quick ? sweep_theta(o, {4.0}) : sweep_theta(o, {2.5, 4.0});
    double worst_h = 0.0, worst_p = 0.0, min_ks = 1.0;
    int idx = 0;
    for (double theta : thetas) {
        for (double gamma : {0.0, 1.0}) {
            ModelParams p = make_params(theta);
            ChainState s = init_thermal(p, n, temperature,
                                        o.seed + 40 + idx);
            s.gamma = gamma;
            const double h0 = total_energy(s);
            const double p0 = total_momentum(s);
            RngStream rng(o.seed, 1250 + idx);
            run_chain(s, recommended_dt(s), steps, rng);
            double dh = std::abs(total_energy(s) / h0 - 1.0);
            double dp = std::abs(total_momentum(s) - p0) /
                        std::max(1.0, std::abs(p0));
            worst_h = std::max(worst_h, dh);
            worst_p = std::max(worst_p, dp);
            if (dh > 1e-10 || dp > 1e-10) b.pass = false;
            if (gamma > 0.0) {
                double d = ks_statistic(s.p, [temperature](double x) {
                    return 0.5 * std::erfc(-x / std::sqrt(2.0 * temperature));
                });
                double pv = ks_pvalue(d, n);
                min_ks = std::min(min_ks, pv);
                if (pv <= 0.01) b.pass = false;
            }
            ++idx;
        }
    }
    b.detail = fmt("max energy drift %.2e, max momentum drift %.2e "
                   "(tol 1e-10), min Gibbs KS p %.3f (gate 0.01)",
                   worst_h, worst_p, min_ks);
    return b;
}

// -------------------------------------------------------------------------
// 13: the per-site potential expanded over mode pairs against the
// real-space site energies, and the wave-field norm against the energy.
Body check_13(const CheckOptions& o) {
    Body b;
    double worst_site = 0.0, worst_norm = 0.0;
    int idx = 0;
    for (double theta : sweep_theta(o, {2.5, 4.0})) {
        ModelParams p = make_params(theta);
        const std::size_t n = 64;
        ChainState s = init_thermal(p, n, 1.0, o.seed + 60 + idx);
        ++idx;
        ChainModes modes = mode_transform(s);
        std::vector<double> ahat(n, 0.0);
        for (std::size_t j = 1; j < n; ++j)
            ahat[j] = s.mode_freq[j] * s.mode_freq[j];
        double scale = 0.0;
        std::vector<double> pot_real(n);
        for (std::size_t x = 0; x < n; ++x) {
            pot_real[x] = site_energy(s, x) - 0.5 * s.p[x] * s.p[x];
            scale = std::max(scale, std::abs(pot_real[x]));
        }
        for (std::size_t x = 0; x < n; ++x) {
            std::complex<double> acc{0.0, 0.0};
            for (std::size_t j = 1; j < n; ++j) {
                for (std::size_t jp = 1; jp < n; ++jp) {
                    double fw = ahat[(j + jp) % n] - ahat[j] - ahat[jp];
                    std::complex<double> phase = std::polar(
                        1.0, 2.0 * PI *
                                 static_cast<double>((j + jp) * x % n) /
                                 static_cast<double>(n));
                    acc += modes.q_hat[j] * modes.q_hat[jp] * phase * fw;
                }
            }
            std::complex<double> pot =
                -acc /
                (4.0 * static_cast<double>(n) * static_cast<double>(n));
            double dev = std::max(std::abs(pot.real() - pot_real[x]),
                                  std::abs(pot.imag())) /
                         scale;
            worst_site = std::max(worst_site, dev);
            if (dev > 1e-10) b.pass = false;
        }
    }
    int nidx = 0;
    for (double theta : sweep_theta(o, {2.5, 4.0})) {
        ModelParams p = make_params(theta);
        const std::size_t n = (theta > 3.0) ? 1024 : 64;
        ChainState s = init_thermal(p, n, 1.0, o.seed + 70 + nidx);
        ++nidx;
        std::vector<std::complex<double>> psi = wave_function(s);
        double acc = 0.0;
        for (const auto& v : psi) acc += std::norm(v);
        acc /= static_cast<double>(n);
        double rel = std::abs(acc / (2.0 * total_energy(s)) - 1.0);
        worst_norm = std::max(worst_norm, rel);
        if (rel > 1e-12) b.pass = false;
    }
    b.detail = fmt("site-energy max rel dev %.2e (tol 1e-10), wave-norm max "
                   "rel dev %.2e (tol 1e-12)",
                   worst_site, worst_norm);
    return b;
}

// -------------------------------------------------------------------------
// 14: hot-spot run: the ensemble profile stays nonnegative within noise,
// keeps its mass, and its spatial variance grows.
Body check_14(const CheckOptions& o) {
    Body b;
    ModelParams p = make_params(4.0, 0.05);
    const std::size_t n = 256, reps = 300, half_width = 8;
    std::vector<ChainState> states;
    states.reserve(reps);
    for (std::size_t r = 0; r < reps; ++r)
        states.push_back(
            init_hotspot(p, n, 1.0, 9.0, half_width, o.seed + 7000 + r));
    const double dt = recommended_dt(states[0]);

    auto profile_stats = [](const WignerEstimate& est, double& mass,
                            double& variance, double& min_sigmas) {
        mass = 0.0;
        double m2 = 0.0;
        min_sigmas = 1e300;
        for (std::size_t i = 0; i < est.grid.size(); ++i) {
            double v = est.values[i];
            mass += v;
            double d = est.grid[i] - 0.5;
            m2 += v * d * d;
            if (est.std_errors[i] > 0.0)
                min_sigmas = std::min(min_sigmas, v / est.std_errors[i]);
        }
        variance = m2 / mass;
    };

    double mass0, var0, sig0;
    profile_stats(estimate_wigner(states, WignerKind::energy_profile), mass0,
                  var0, sig0);
    std::vector<double> variances = {var0};
    double worst_mass = 0.0, worst_sig = sig0;
    for (int leg = 0; leg < 2; ++leg) {
        for (std::size_t r = 0; r < reps; ++r) {
            RngStream rng(o.seed, 60000 + 1000 * leg + r);
            run_chain(states[r], dt, 225, rng);
        }
        double mass, var, sig;
        profile_stats(estimate_wigner(states, WignerKind::energy_profile),
                      mass, var, sig);
        variances.push_back(var);
        worst_mass = std::max(worst_mass, std::abs(mass / mass0 - 1.0));
        worst_sig = std::min(worst_sig, sig);
    }
    bool growing = variances[0] < variances[1] && variances[1] < variances[2];
    b.pass = growing && worst_mass <= 1e-10 && worst_sig >= -3.0;
    b.detail = fmt("variance %.5f -> %.5f -> %.5f (%s), mass drift %.2e, "
                   "min value %.1f sigma above zero gate -3",
                   variances[0], variances[1], variances[2],
                   growing ? "growing" : "NOT growing", worst_mass,
                   worst_sig);
    return b;
}

// -------------------------------------------------------------------------
// 15: the reference solver itself: Gaussian closed form at exponent 2,
// exact mass conservation, and self-similar collapse of the delta solution.
Body check_15(const CheckOptions& o) {
    Body b;
    // Heat branch against the closed-form Gaussian.
    const double sigma0 = 1.2, kappa_heat = 2.0, t_heat = 1.5;
    FracField heat =
        field_from_function(64.0, 1024, 2.0, kappa_heat, [=](double y) {
            return std::exp(-y * y / (2.0 * sigma0 * sigma0)) /
                   (sigma0 * std::sqrt(2.0 * PI));
        });
    double mass_before = field_mass(heat);
    FracField heat_t = evolve(heat, t_heat);
    double dev_mass = std::abs(field_mass(heat_t) - mass_before);
    std::vector<double> ys(41);
    for (int i = 0; i < 41; ++i) ys[i] = -7.4 + 0.37 * i;
    std::vector<double> got = to_real_space(heat_t, ys);
    const double var_t =
        sigma0 * sigma0 + kappa_heat * t_heat / (2.0 * PI * PI);
    double dev_heat = 0.0;
    for (int i = 0; i < 41; ++i) {
        double want = std::exp(-ys[i] * ys[i] / (2.0 * var_t)) /
                      std::sqrt(2.0 * PI * var_t);
        dev_heat = std::max(dev_heat, std::abs(got[i] - want));
    }

    // Self-similar collapse of the delta solution in the slow-decay branch.
    ModelParams p = make_params(2.5);
    const double alpha = stable_index(p);
    FracField della = field_delta(4096.0, 65536, alpha, C_big(p));
    dev_mass = std::max(
        dev_mass, std::abs(field_mass(evolve(della, 1.0)) - field_mass(della)));
    std::vector<double> us(41);
    for (int i = 0; i < 41; ++i) us[i] = -10.0 + 0.5 * i;
    std::vector<double> base = to_real_space(evolve(della, 1.0), us);
    double peak = 0.0;
    for (double v : base) peak = std::max(peak, std::abs(v));
    double dev_col = 0.0;
    for (double t : {2.0, 4.0}) {
        double s = std::pow(t, 1.0 / alpha);
        std::vector<double> ys2(41);
        for (int i = 0; i < 41; ++i) ys2[i] = s * us[i];
        std::vector<double> wt = to_real_space(evolve(della, t), ys2);
        for (int i = 0; i < 41; ++i)
            dev_col = std::max(dev_col, std::abs(s * wt[i] - base[i]));
    }
    (void)o;
    b.pass = dev_heat <= 1e-10 && dev_mass <= 1e-12 && dev_col <= 0.02 * peak;
    b.detail = fmt("heat dev %.2e (tol 1e-10), mass dev %.2e (tol 1e-12), "
                   "collapse dev %.4f of peak (tol 0.02)",
                   dev_heat, dev_mass, dev_col / peak);
    return b;
}

Body dispatch(int id, const std::string& part, const CheckOptions& o) {
    switch (id) {
        case 1: return check_01(o);
        case 2: return check_02(o);
        case 3: return check_03(o, part == "theta3");
        case 4: return check_04(o);
        case 5: return check_05(o);
        case 6: return check_06(o);
        case 7: return check_07(o);
        case 8: return check_08(o);
        case 9: return check_09(o);
        case 10: return check_10(o);
        case 11: return check_11(o);
        case 12: return check_12(o);
        case 13: return check_13(o);
        case 14: return check_14(o);
        case 15: return check_15(o);
        default: throw ConfigError("run_check: unknown check id");
    }
}

}  // namespace

const std::vector<CheckEntry>& check_registry() {
    static const std::vector<CheckEntry> entries = {
        {1, "", "scattering kernel rank-two decomposition", true},
        {2, "", "scattering kernel marginal and normalization", true},
        {3, "", "dispersion leading-order asymptotics (theta 2.5 and 4)",
         false},
        {3, "theta3", "dispersion leading-order asymptotics (theta 3)",
         false},
        {4, "", "rescaled dispersion shift limit", false},
        {5, "", "closed-form integral identities", true},
        {6, "", "coefficient identity between independent routes", true},
        {7, "", "resolvent convergence to the stable symbol", false},
        {8, "", "jump chain transition, stationarity, reversibility", false},
        {9, "", "tail law exponent and prefactor", false},
        {10, "", "stable index and coefficient from scaled flights", false},
        {11, "", "k-homogenization and fractional heat agreement", false},
        {12, "", "microscopic conservation and Gibbs stationarity", true},
        {13, "", "spectral and real-space energy agreement", true},
        {14, "", "hot-spot spreading stays nonnegative and widens", false},
        {15, "", "fractional heat equation sanity", true},
    };
    return entries;
}

CheckResult run_check(int id, const std::string& part,
                      const CheckOptions& options) {
    const CheckEntry* entry = nullptr;
    for (const CheckEntry& e : check_registry())
        if (e.id == id && part == e.part) entry = &e;
    if (entry == nullptr)
        throw ConfigError("run_check: no check with this id and part");
    CheckResult result;
    result.id = id;
    result.part = part;
    result.name = entry->name;
    auto start = std::chrono::steady_clock::now();
    try {
        Body b = dispatch(id, part, options);
        result.passed = b.pass;
        result.detail = b.detail;
    } catch (const std::exception& e) {
        result.passed = false;
        result.detail = std::string("exception: ") + e.what();
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return result;
}

std::vector<CheckResult> run_all_checks(const CheckOptions& options,
                                        bool quick_only) {
    std::vector<CheckResult> results;
    for (const CheckEntry& e : check_registry()) {
        if (quick_only && !e.in_quick) continue;
        results.push_back(run_check(e.id, e.part, options));
    }
    return results;
}

std::string check_line(const CheckResult& result) {
    std::string tag = fmt("%02d", result.id);
    if (!result.part.empty()) tag += ":" + result.part;
    return fmt("[%s] %s %s (%.2f s) %s", tag.c_str(),
               result.passed ? "PASS" : "FAIL", result.name.c_str(),
               result.seconds, result.detail.c_str());
}

}  // namespace lrchain
