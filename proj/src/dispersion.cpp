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

#include "lrchain/dispersion.hpp"

#include <gsl/gsl_sf_gamma.h>
#include <gsl/gsl_sf_zeta.h>

#include <cmath>
#include <complex>
#include <string>

#include "lrchain/quad.hpp"

namespace lrchain {

namespace detail {

namespace {

constexpr double SMALL_K_SWITCH = 1e-3;

bool near_integer(double s, long& n) {
    double r = std::round(s);
    if (std::abs(s - r) < 1e-12 && r >= 2.0) {
        n = static_cast<long>(r);
        return true;
    }
    return false;
}

double harmonic(long n) {
    double h = 0.0;
    for (long i = 1; i <= n; ++i) h += 1.0 / static_cast<double>(i);
    return h;
}

double factorial(long n) {
    double f = 1.0;
    for (long i = 2; i <= n; ++i) f *= static_cast<double>(i);
    return f;
}

}  // namespace

void trig_series_direct(double s, double k, double tol, long max_terms,
                        double& cos_sum, double& sin_sum) {
    double ka = std::abs(k);
    double phi = 2.0 * PI * ka;
    long n_terms = std::max<long>(384, static_cast<long>(std::ceil(48.0 / phi)));

    for (int attempt = 0;; ++attempt) {
        if (n_terms > max_terms)
            throw NonConvergence(
                "trig_series_direct: tail bound needs " +
                std::to_string(n_terms) + " terms, exceeding series_max_terms");

        CompensatedSum sc, ss;
        for (long x = 1; x <= n_terms; ++x) {
            double arg = phi * static_cast<double>(x);
            double w = std::pow(static_cast<double>(x), -s);
            sc.add(std::cos(arg) * w);
            ss.add(std::sin(arg) * w);
        }

        double xn = static_cast<double>(n_terms);
        std::complex<double> iphi(0.0, phi);
        std::complex<double> egN = std::exp(std::complex<double>(0.0, phi * xn));
        double npow = std::pow(xn, -s);

        // integration-by-parts tail of Int_N^inf e^{i phi x} x^-s dx
        std::complex<double> tail_int(0.0, 0.0);
        std::complex<double> pref = -egN * npow / iphi;
        for (int m = 0; m < 24; ++m) {
            tail_int += pref;
            if (std::abs(pref) < 1e-3 * tol) break;
            pref *= (s + m) / (iphi * xn);
        }

        // Euler-Maclaurin corrections: sum_{x>N} g = tail_int - g(N)/2
        //   - sum_j B_2j/(2j)! g^(2j-1)(N); derivatives via the recurrence
        //   c_{m+1,j} = i phi c_{m,j} - (s+j-1) c_{m,j-1} on h_m = g^(m)/g.
        static const double B2J_OVER_FACT[] = {
            0.083333333333333333,    // B_2/2!
            -0.0013888888888888889,  // B_4/4!
            3.3068783068783069e-5,   // B_6/6!
            -8.2671957671957672e-7,  // B_8/8!
            2.0876756987868099e-8,   // B_10/10!
            -5.2841901386874932e-10, 1.3382536530684679e-11,
            -3.3896802963225829e-13, 8.5860620562778446e-15,
            -2.1748686985580619e-16, 5.5090028283602295e-18,
            -1.3954464685812523e-19, 3.5347070396294675e-21,
            -8.9535174270375469e-23, 2.2679524523376831e-24,
            -5.7447906688722024e-26};
        std::complex<double> c[40];
        std::complex<double> em(0.0, 0.0);
        c[0] = 1.0;
        int order = 0;
        double w1 = 1.0 / xn;
        double min_corr = 1e300;
        bool ok = false;
        std::complex<double> gN = egN * npow;
        for (int j = 1; j <= 16; ++j) {
            while (order < 2 * j - 1) {
                for (int q = order + 1; q >= 1; --q)
                    c[q] = iphi * c[q] - (s + q - 1.0) * c[q - 1];
                c[0] = iphi * c[0];
                ++order;
            }
            std::complex<double> hval(0.0, 0.0);
            double wq = 1.0;
            for (int q = 0; q <= order; ++q) {
                hval += c[q] * wq;
                wq *= w1;
            }
            std::complex<double> corr = B2J_OVER_FACT[j - 1] * gN * hval;
            double mag = std::abs(corr);
            if (mag > min_corr) break;  // asymptotic series turned around
            em += corr;
            min_corr = mag;
            if (mag < 0.1 * tol) {
                ok = true;
                break;
            }
        }
        if (!ok && min_corr >= 0.1 * tol && attempt < 4) {
            n_terms *= 2;
            continue;
        }

        std::complex<double> tail = tail_int - 0.5 * gN - em;
        double csum = sc.value() + tail.real();
        double ssum = ss.value() + tail.imag();
        cos_sum = csum;
        sin_sum = (k < 0.0) ? -ssum : ssum;
        return;
    }
}

void trig_series_expansion(double s, double k, double& cos_sum,
                           double& sin_sum) {
    double ka = std::abs(k);
    double phi = 2.0 * PI * ka;
    std::complex<double> li(0.0, 0.0);
    std::complex<double> iphi(0.0, phi);
    double logphi = std::log(phi);

    long n = 0;
    bool is_int = near_integer(s, n);
    if (is_int) {
        // (i phi)^(n-1)/(n-1)! * (H_{n-1} - log(-i phi))
        std::complex<double> pw = std::pow(iphi, static_cast<double>(n - 1));
        std::complex<double> logterm(logphi, -PI / 2.0);
        li += pw / factorial(n - 1) *
              (std::complex<double>(harmonic(n - 1), 0.0) - logterm);
    } else {
        // Gamma(1-s) (-i phi)^(s-1)
        double g = gsl_sf_gamma(1.0 - s);
        std::complex<double> pw =
            std::exp((s - 1.0) * std::complex<double>(logphi, -PI / 2.0));
        li += g * pw;
    }

    std::complex<double> pw(1.0, 0.0);
    double scale = 1.0;
    int small_count = 0;
    for (int m = 0; m <= 120; ++m) {
        if (m > 0) pw *= iphi / static_cast<double>(m);
        if (is_int && m == n - 1) continue;
        double z = gsl_sf_zeta(s - static_cast<double>(m));
        std::complex<double> term = z * pw;
        li += term;
        double mag = std::abs(term);
        scale = std::max(scale, std::abs(li));
        if (mag < 1e-18 * scale) {
            if (++small_count >= 2 && m > 8) break;
        } else {
            small_count = 0;
        }
        if (m == 120)
            throw NonConvergence("trig_series_expansion: no convergence");
    }
    cos_sum = li.real();
    sin_sum = (k < 0.0) ? -li.imag() : li.imag();
}

double a_hat_expansion(double theta, double k) {
    double ka = std::abs(k);
    if (ka == 0.0) return 0.0;
    double phi = 2.0 * PI * ka;
    double logphi = std::log(phi);

    double lead;
    long n = 0;
    if (near_integer(theta, n)) {
        double fac = factorial(n - 1);
        double pw = std::pow(phi, static_cast<double>(n - 1));
        if (n % 2 == 0) {
            double sign = (n / 2 % 2 == 0) ? -1.0 : 1.0;  // (-1)^(n/2+1)
            lead = sign * PI * pw / fac;
        } else {
            double sign = ((n - 1) / 2 % 2 == 0) ? 1.0 : -1.0;  // (-1)^((n-1)/2)
            lead = -2.0 * sign * pw * (harmonic(n - 1) - logphi) / fac;
        }
    } else {
        double A = -2.0 * gsl_sf_gamma(1.0 - theta) *
                   std::cos(PI * (theta - 1.0) / 2.0);
        lead = A * std::pow(phi, theta - 1.0);
    }

    // -2 sum_j (-1)^j zeta(theta - 2j) phi^(2j)/(2j)!
    CompensatedSum acc;
    acc.add(lead);
    double pw = 1.0;
    double sign = 1.0;
    double scale = std::max(std::abs(lead), 1e-300);
    int small_count = 0;
    bool skip_int = near_integer(theta, n);
    for (int j = 1; j <= 60; ++j) {
        pw *= phi * phi / ((2.0 * j - 1.0) * (2.0 * j));
        sign = -sign;
        if (skip_int && 2 * j == n - 1) continue;  // absorbed into lead
        double arg = theta - 2.0 * static_cast<double>(j);
        if (skip_int && std::abs(arg - 1.0) < 0.5) continue;  // m = n-1 odd n
        double term = -2.0 * sign * gsl_sf_zeta(arg) * pw;
        acc.add(term);
        scale = std::max(scale, std::abs(acc.value()));
        if (std::abs(term) < 1e-18 * scale) {
            if (++small_count >= 2 && j > 4) break;
        } else {
            small_count = 0;
        }
    }
    return acc.value();
}

double a_hat_prime_expansion(double theta, double k) {
    double ka = std::abs(k);
    if (ka == 0.0) return 0.0;
    double s = theta - 1.0;
    double phi = 2.0 * PI * ka;
    double logphi = std::log(phi);

    double lead;
    long n = 0;
    bool is_int = near_integer(s, n);
    if (is_int) {
        double fac = factorial(n - 1);
        double pw = std::pow(phi, static_cast<double>(n - 1));
        if (n % 2 == 1) {
            double sign = ((n - 1) / 2 % 2 == 0) ? 1.0 : -1.0;
            lead = sign * (PI / 2.0) * pw / fac;
        } else {
            double sign = (n / 2 % 2 == 0) ? 1.0 : -1.0;  // -(-1)^(n/2)
            lead = -sign * pw * (harmonic(n - 1) - logphi) / fac;
        }
    } else {
        lead = -gsl_sf_gamma(1.0 - s) * std::sin(PI * (s - 1.0) / 2.0) *
               std::pow(phi, s - 1.0);
    }

    // + sum_j (-1)^j zeta(s - 2j - 1) phi^(2j+1)/(2j+1)!
    CompensatedSum acc;
    acc.add(lead);
    double pw = phi;
    double sign = 1.0;
    double scale = std::max(std::abs(lead), 1e-300);
    int small_count = 0;
    for (int j = 0; j <= 60; ++j) {
        if (j > 0) {
            pw *= phi * phi / ((2.0 * j) * (2.0 * j + 1.0));
            sign = -sign;
        }
        if (is_int && 2 * j + 1 == n - 1) continue;  // absorbed into lead
        double term = sign * gsl_sf_zeta(s - 2.0 * j - 1.0) * pw;
        acc.add(term);
        scale = std::max(scale, std::abs(acc.value()));
        if (std::abs(term) < 1e-18 * scale) {
            if (++small_count >= 2 && j > 4) break;
        } else {
            small_count = 0;
        }
    }
    double val = 4.0 * PI * acc.value();
    return (k < 0.0) ? -val : val;
}

}  // namespace detail

double a_hat(const ModelParams& params, double k) {
    params.validate();
    k = reduce_torus(k);
    if (k == 0.0) return 0.0;
    if (std::abs(k) < detail::SMALL_K_SWITCH)
        return detail::a_hat_expansion(params.theta, k);
    double sc, ss;
    detail::trig_series_direct(params.theta, k, params.series_tol,
                               params.series_max_terms, sc, ss);
    return 2.0 * gsl_sf_zeta(params.theta) - 2.0 * sc;
}

double a_hat_prime(const ModelParams& params, double k) {
    params.validate();
    params.require_theta_above_2("a_hat_prime");
    k = reduce_torus(k);
    if (k == 0.0) return 0.0;
    if (std::abs(k) < detail::SMALL_K_SWITCH)
        return detail::a_hat_prime_expansion(params.theta, k);
    double sc, ss;
    detail::trig_series_direct(params.theta - 1.0, k, params.series_tol,
                               params.series_max_terms, sc, ss);
    return 4.0 * PI * ss;
}

DispersionSample omega_and_prime(const ModelParams& params, double k) {
    params.require_theta_above_2("omega_and_prime");
    k = reduce_torus(k);
    if (k == 0.0)
        throw DomainError("omega_and_prime: derivative undefined at k = 0");
    DispersionSample s;
    s.k = k;
    s.a_hat = a_hat(params, k);
    s.a_hat_prime = a_hat_prime(params, k);
    s.omega = std::sqrt(s.a_hat);
    s.omega_prime = s.a_hat_prime / (2.0 * s.omega);
    return s;
}

double C_theta(const ModelParams& params, bool closed_form) {
    params.require_theta_above_2("C_theta");
    double th = params.theta;
    if (std::abs(th - 3.0) < 1e-12) return 4.0 * PI * PI;
    if (th > 3.0) return 4.0 * PI * PI * gsl_sf_zeta(th - 2.0);
    if (closed_form)
        return -std::pow(2.0, th) * std::pow(PI, th - 1.0) *
               gsl_sf_gamma(1.0 - th) * std::cos(PI * (th - 1.0) / 2.0);

    // adaptive head on [0, Y], analytic oscillatory tail beyond
    const double Y = 40.0;
    double head = integrate(
        [th](double y) { return std::pow(std::sin(y), 2) * std::pow(y, -th); },
        0.0, Y, 0.0, 1e-12);
    double tail = std::pow(Y, 1.0 - th) / (2.0 * (th - 1.0));
    // minus (1/2) Int_Y^inf cos(2y) y^-theta dy, by repeated parts
    double costail = 0.0;
    double coef = 1.0;
    double ypow = std::pow(Y, -th);
    double c2 = std::cos(2.0 * Y), s2 = std::sin(2.0 * Y);
    // Int cos(2y) y^-a = -sin(2Y)/2 Y^-a + a/2 Int sin(2y) y^-(a+1); iterate
    double a = th;
    double sgn_pair[2] = {s2, c2};
    double sign = -1.0;
    for (int m = 0; m < 14; ++m) {
        double t = sign * sgn_pair[m % 2] * coef * ypow / 2.0;
        costail += t;
        coef *= (a + m) / 2.0;
        ypow /= Y;
        if (m % 2 == 0) sign = -sign;
        if (std::abs(coef * ypow) < 1e-16) break;
    }
    return 4.0 * std::pow(PI, th - 1.0) * (head + tail - 0.5 * costail);
}

double delta_eps_omega(const ModelParams& params, double eps, double p,
                       double k) {
    params.require_theta_above_2("delta_eps_omega");
    if (!(eps > 0.0 && eps < 1.0))
        throw DomainError("delta_eps_omega: eps must lie in (0,1)");
    if (p == 0.0) return 0.0;
    double kp = reduce_torus(k + eps * p / 2.0);
    double km = reduce_torus(k - eps * p / 2.0);
    return (std::sqrt(a_hat(params, kp)) - std::sqrt(a_hat(params, km))) / eps;
}

double h_s_inverse(double s, double eps) {
    if (!(s < 1.0)) throw DomainError("h_s_inverse: requires s < 1");
    if (!(eps > 0.0 && eps < 1.0))
        throw DomainError("h_s_inverse: eps must lie in (0,1)");
    double target = std::pow(eps, 2.0 * (1.0 - s));
    auto F = [](double y) { return std::pow(y, 4) / (-std::log(y)); };
    double lo = 1e-300, hi = 1.0 - 1e-9;
    for (int i = 0; i < 300; ++i) {
        double mid = 0.5 * (lo + hi);
        if (F(mid) < target)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-13 * lo) break;
    }
    return 0.5 * (lo + hi);
}

double time_scaling(const ModelParams& params, double eps) {
    params.validate();
    if (!(eps > 0.0 && eps < 1.0))
        throw DomainError("time_scaling: eps must lie in (0,1)");
    double th = params.theta, s = params.s;
    if (std::abs(th - 3.0) < 1e-12) {
        if (s == 1.0) return eps;
        double h = h_s_inverse(s, eps);
        return std::pow(eps, s) * h * h * h;
    }
    if (th < 3.0) return std::pow(eps, (6.0 - s * (th - 1.0)) / (7.0 - th));
    return std::pow(eps, (3.0 - s) / 2.0);
}

double stable_index(const ModelParams& params) {
    params.require_theta_above_2("stable_index");
    if (params.theta <= 3.0) return 6.0 / (7.0 - params.theta);
    return 1.5;
}

double F_two_point(const ModelParams& params, double k, double kp) {
    params.require_theta_above_2("F_two_point");
    k = reduce_torus(k);
    kp = reduce_torus(kp);
    if (k == 0.0 || kp == 0.0)
        throw DomainError("F_two_point: requires k != 0 and k' != 0");
    double num =
        a_hat(params, reduce_torus(k + kp)) - a_hat(params, k) - a_hat(params, kp);
    return num / (std::sqrt(a_hat(params, k)) * std::sqrt(a_hat(params, kp)));
}

double delta_eps_omega_rescaled(const ModelParams& params, double eps,
                                double p, double k) {
    params.require_theta_above_2("delta_eps_omega_rescaled");
    double th = params.theta, g0 = params.gamma0;
    double f = time_scaling(params, eps);
    double g3 = std::cbrt(f / std::pow(eps, params.s));
    double pa = std::abs(p);
    if (th < 3.0 - 1e-12) {
        double keps =
            std::pow(g0, -2.0 / (7.0 - th)) * std::pow(pa, 2.0 / (7.0 - th)) *
            g3 * k;
        double pref = std::pow(g0, -(3.0 - th) / (7.0 - th)) *
                      std::pow(pa, -4.0 / (7.0 - th)) *
                      std::pow(g3, (3.0 - th) / 2.0);
        return pref * delta_eps_omega(params, eps, p, keps);
    }
    double keps = std::sqrt(pa / g0) * g3 * k;
    if (std::abs(th - 3.0) < 1e-12) {
        double pref = (1.0 / pa) / std::sqrt(-std::log(g3));
        return pref * delta_eps_omega(params, eps, p, keps);
    }
    return delta_eps_omega(params, eps, p, keps) / pa;
}

double delta_eps_omega_rescaled_limit(const ModelParams& params, double k) {
    params.require_theta_above_2("delta_eps_omega_rescaled_limit");
    double th = params.theta;
    double C = C_theta(params);
    double sgn = (k > 0.0) ? 1.0 : ((k < 0.0) ? -1.0 : 0.0);
    if (th < 3.0 - 1e-12)
        return sgn * (th - 1.0) * std::sqrt(C) / 2.0 *
               std::pow(std::abs(k), -(3.0 - th) / 2.0);
    return sgn * std::sqrt(C);
}

}  // namespace lrchain
