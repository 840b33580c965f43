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

#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include <json.hpp>

#include "lrchain/frac_pde.hpp"
#include "lrchain/params.hpp"

using namespace lrchain;

namespace {

std::complex<double> gauss_hat(double p, double sigma) {
    return {std::exp(-2.0 * PI * PI * sigma * sigma * p * p), 0.0};
}

FracField gauss_field(double L, std::size_t n, double alpha, double kappa,
                      double sigma) {
    return field_from_modes(L, n, alpha, kappa, [sigma](double p) {
        return gauss_hat(p, sigma);
    });
}

}  // namespace

TEST_CASE("field construction rejects bad shapes and parameters") {
    auto one = [](double) { return std::complex<double>(1.0); };
    CHECK_THROWS_AS(field_from_modes(0.0, 16, 1.5, 1.0, one), DomainError);
    CHECK_THROWS_AS(field_from_modes(-4.0, 16, 1.5, 1.0, one), DomainError);
    CHECK_THROWS_AS(field_from_modes(4.0, 12, 1.5, 1.0, one), DomainError);
    CHECK_THROWS_AS(field_from_modes(4.0, 2, 1.5, 1.0, one), DomainError);
    CHECK_THROWS_AS(field_from_modes(4.0, 0, 1.5, 1.0, one), DomainError);
    CHECK_THROWS_AS(field_from_modes(4.0, 16, 0.0, 1.0, one), DomainError);
    CHECK_THROWS_AS(field_from_modes(4.0, 16, 2.5, 1.0, one), DomainError);
    CHECK_THROWS_AS(field_from_modes(4.0, 16, -1.0, 1.0, one), DomainError);
    CHECK_THROWS_AS(field_from_modes(4.0, 16, 1.5, 0.0, one), DomainError);
    CHECK_THROWS_AS(field_from_modes(4.0, 16, 1.5, -2.0, one), DomainError);
}

TEST_CASE("field_from_modes rejects transforms of non-real fields") {
    // c(-p) != conj(c(p)): not the transform of any real field.
    auto bad = [](double p) {
        return std::complex<double>(1.0, std::cos(p));
    };
    CHECK_THROWS_AS(field_from_modes(4.0, 16, 1.5, 1.0, bad), DomainError);

    // Complex extreme mode with everything else fine.
    auto bad_edge = [](double p) {
        if (p < -1.9) return std::complex<double>(0.0, 1.0);
        return std::complex<double>(1.0, 0.0);
    };
    CHECK_THROWS_AS(field_from_modes(1.0, 4, 1.5, 1.0, bad_edge), DomainError);
}

TEST_CASE("limit_field wires in the stable index and coefficient") {
    ModelParams p25;
    p25.theta = 2.5;
    FracField f = limit_field(p25, 64.0, 256,
                              [](double) { return std::complex<double>(1.0); });
    CHECK(f.alpha == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(f.kappa ==
          doctest::Approx(3.1421269365609793).epsilon(1e-12));

    ModelParams p4;
    p4.theta = 4.0;
    FracField g = limit_field(p4, 64.0, 256,
                              [](double) { return std::complex<double>(1.0); });
    CHECK(g.alpha == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(g.kappa ==
          doctest::Approx(4.6695556221333543).epsilon(1e-12));
}

TEST_CASE("evolve: identity at dt = 0, mass mode frozen, contraction") {
    FracField f = gauss_field(64.0, 512, 1.5, 2.0, 1.0);
    FracField f0 = evolve(f, 0.0);
    REQUIRE(f0.coeffs.size() == f.coeffs.size());
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        CHECK(f0.coeffs[i] == f.coeffs[i]);
    CHECK(f0.time == 0.0);

    FracField ft = evolve(f, 3.25);
    CHECK(ft.time == 3.25);
    CHECK(ft.mode(0) == f.mode(0));
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        CHECK(std::abs(ft.coeffs[i]) <= std::abs(f.coeffs[i]));
        if (f.p(i) != 0.0 && std::abs(f.coeffs[i]) > 0.0)
            CHECK(std::abs(ft.coeffs[i]) < std::abs(f.coeffs[i]));
    }

    CHECK_THROWS_AS(evolve(f, -1e-9), DomainError);
}

TEST_CASE("evolve composes exactly: two half steps equal one full step") {
    FracField f = gauss_field(32.0, 256, 4.0 / 3.0, 3.0, 0.7);
    FracField two = evolve(evolve(f, 0.5), 0.5);
    FracField one = evolve(f, 1.0);
    REQUIRE(two.time == one.time);
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        CHECK(two.coeffs[i] == one.coeffs[i]);

    // Uneven dyadic split composes bitwise as well.
    FracField mix = evolve(evolve(evolve(f, 0.25), 0.5), 0.25);
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
        CHECK(mix.coeffs[i] == one.coeffs[i]);
}

TEST_CASE("uniform mode alone inverts to the constant 1/L") {
    auto only_zero = [](double p) {
        return std::complex<double>(p == 0.0 ? 1.0 : 0.0, 0.0);
    };
    FracField f = field_from_modes(8.0, 32, 1.5, 1.0, only_zero);
    std::vector<double> ys = {-4.0, -1.3, 0.0, 0.017, 3.999};
    std::vector<double> w = to_real_space(f, ys);
    for (double v : w) CHECK(v == doctest::Approx(0.125).epsilon(1e-14));
}

TEST_CASE("alpha = 2 heat evolution matches the Gaussian closed form") {
    const double L = 64.0, sigma0 = 1.0, kappa = 2.0, t = 1.5;
    FracField f = gauss_field(L, 1024, 2.0, kappa, sigma0);
    FracField ft = evolve(f, t);
    const double var = sigma0 * sigma0 + kappa * t / (2.0 * PI * PI);
    std::vector<double> ys;
    for (int i = -20; i <= 20; ++i) ys.push_back(0.37 * i);
    std::vector<double> w = to_real_space(ft, ys);
    for (std::size_t i = 0; i < ys.size(); ++i) {
        double exact = std::exp(-0.5 * ys[i] * ys[i] / var) /
                       std::sqrt(2.0 * PI * var);
        CHECK(w[i] == doctest::Approx(exact).epsilon(1e-10));
    }
    CHECK(field_mass(ft) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("evolved profiles stay symmetric for symmetric data") {
    FracField ft = evolve(gauss_field(64.0, 512, 1.5, 1.3, 0.8), 2.0);
    std::vector<double> pos, neg;
    for (int i = 1; i <= 40; ++i) {
        pos.push_back(0.2 * i);
        neg.push_back(-0.2 * i);
    }
    std::vector<double> wp = to_real_space(ft, pos);
    std::vector<double> wn = to_real_space(ft, neg);
    for (std::size_t i = 0; i < wp.size(); ++i)
        CHECK(std::abs(wp[i] - wn[i]) <= 1e-12);
}

TEST_CASE("to_real_space rejects points off the torus") {
    FracField f = gauss_field(16.0, 64, 1.5, 1.0, 1.0);
    CHECK_NOTHROW(to_real_space(f, {-8.0, 7.999}));
    CHECK_THROWS_AS(to_real_space(f, {8.0}), DomainError);
    CHECK_THROWS_AS(to_real_space(f, {-8.0000001}), DomainError);
    CHECK_THROWS_AS(to_real_space(f, {123.0}), DomainError);
}

TEST_CASE("point mass is flagged as unresolved until it spreads") {
    FracField d = field_delta(8.0, 64, 1.5, 3.0);
    CHECK_THROWS_AS(to_real_space(d, {0.0}), AliasWarning);
    CHECK_THROWS_AS(to_real_grid(d), AliasWarning);
    // After t = 2 the extreme mode has decayed to exp(-3 * 4^1.5 * 2).
    FracField dt = evolve(d, 2.0);
    CHECK_NOTHROW(to_real_space(dt, {0.0}));
    CHECK_NOTHROW(to_real_grid(dt));
}

TEST_CASE("corrupted coefficients trip the imaginary-residue guard") {
    FracField f = evolve(gauss_field(16.0, 64, 1.5, 1.0, 1.0), 0.5);
    f.coeffs[f.n_modes / 2 + 3] += std::complex<double>(0.0, 1e-3);
    CHECK_THROWS_AS(to_real_space(f, {0.5}), DomainError);
    CHECK_THROWS_AS(to_real_grid(f), DomainError);
}

TEST_CASE("sampled and analytic Gaussian transforms agree per mode") {
    const double L = 64.0;
    const std::size_t n = 1024;
    FracField fa = gauss_field(L, n, 2.0, 1.0, 1.0);
    FracField fs = field_from_function(L, n, 2.0, 1.0, [](double y) {
        return std::exp(-0.5 * y * y) / std::sqrt(2.0 * PI);
    });
    for (std::size_t i = 0; i < n; ++i)
        CHECK(std::abs(fa.coeffs[i] - fs.coeffs[i]) <= 1e-12);
}

TEST_CASE("native-grid and direct-sum inversions agree") {
    const double L = 32.0;
    const std::size_t n = 256;
    FracField ft = evolve(gauss_field(L, n, 4.0 / 3.0, 2.0, 0.9), 1.0);
    std::vector<double> grid = to_real_grid(ft);
    std::vector<double> ys(n);
    for (std::size_t m = 0; m < n; ++m)
        ys[m] = -0.5 * L + static_cast<double>(m) * (L / n);
    std::vector<double> direct = to_real_space(ft, ys);
    for (std::size_t m = 0; m < n; ++m)
        CHECK(std::abs(grid[m] - direct[m]) <= 1e-10);
}

TEST_CASE("compare_l2 basics") {
    CHECK(compare_l2({0.0, 0.0}, {3.0, 4.0}, 0.5) ==
          doctest::Approx(std::sqrt(12.5)).epsilon(1e-14));
    CHECK(compare_l2({1.0, 2.0}, {1.0, 2.0}, 0.1) == 0.0);
    CHECK_THROWS_AS(compare_l2({1.0}, {1.0, 2.0}, 0.1), GridMismatch);
    CHECK_THROWS_AS(compare_l2({1.0}, {2.0}, 0.0), DomainError);
}

TEST_CASE("spread point mass is nonnegative up to roundoff") {
    FracField dt = evolve(field_delta(256.0, 4096, 4.0 / 3.0, 3.14), 1.0);
    std::vector<double> w = to_real_grid(dt);
    double mx = 0.0, mn = 0.0;
    for (double v : w) {
        mx = std::max(mx, v);
        mn = std::min(mn, v);
    }
    CHECK(mx > 0.0);
    CHECK(mn >= -1e-8 * mx);
}

TEST_CASE("point-mass solution collapses under the self-similar rescaling") {
    const double alpha = 4.0 / 3.0;
    const double kappa = 3.1421269365609793;
    FracField d = field_delta(4096.0, 1u << 16, alpha, kappa);
    std::vector<double> xs;
    for (int i = -100; i <= 100; ++i) xs.push_back(0.3 * i);

    auto rescaled = [&](double t) {
        FracField ft = evolve(d, t);
        double s = std::pow(t, 1.0 / alpha);
        std::vector<double> ys(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = xs[i] * s;
        std::vector<double> w = to_real_space(ft, ys);
        for (double& v : w) v *= s;
        return w;
    };

    std::vector<double> r1 = rescaled(1.0);
    std::vector<double> r2 = rescaled(2.0);
    std::vector<double> r4 = rescaled(4.0);
    double peak = 0.0;
    for (double v : r1) peak = std::max(peak, std::abs(v));
    REQUIRE(peak > 0.1);
    double d2 = 0.0, d4 = 0.0;
    for (std::size_t i = 0; i < r1.size(); ++i) {
        d2 = std::max(d2, std::abs(r2[i] - r1[i]));
        d4 = std::max(d4, std::abs(r4[i] - r1[i]));
    }
    CHECK(d2 <= 0.02 * peak);
    CHECK(d4 <= 0.02 * peak);
}

TEST_CASE("boundary_mass_fraction tracks how much of the law escapes") {
    // A unit Gaussian in a wide box keeps essentially no boundary mass.
    FracField g = evolve(gauss_field(64.0, 1024, 2.0, 1.0, 1.0), 0.25);
    CHECK(boundary_mass_fraction(g) <= 1e-12);

    // A heavy-tailed stable law in a small box leaves visible mass outside
    // |y| < L/4, and less of it in a box four times as large.
    FracField small_box = evolve(field_delta(16.0, 256, 4.0 / 3.0, 3.14), 1.0);
    FracField big_box = evolve(field_delta(64.0, 1024, 4.0 / 3.0, 3.14), 1.0);
    double fs = boundary_mass_fraction(small_box);
    double fb = boundary_mass_fraction(big_box);
    CHECK(fs > 1e-3);
    CHECK(fs < 0.5);
    CHECK(fb < fs);
}

TEST_CASE("field metadata serializes the declared quantities") {
    FracField f = gauss_field(2.0, 8, 1.5, 2.0, 0.25);
    FracField ft = evolve(f, 0.75);
    nlohmann::json j = nlohmann::json::parse(field_metadata_json(ft));
    CHECK(j.size() == 5);
    CHECK(j["alpha"].get<double>() == 1.5);
    CHECK(j["domain_length"].get<double>() == 2.0);
    CHECK(j["kappa"].get<double>() == 2.0);
    CHECK(j["n_modes"].get<std::size_t>() == 8);
    CHECK(j["time"].get<double>() == 0.75);
}

TEST_CASE("profile_csv emits the documented layout") {
    std::string csv = profile_csv({0.5, -1.0}, {0.25, 2.0});
    CHECK(csv == "y,W\n0.5,0.25\n-1,2\n");
    CHECK_THROWS_AS(profile_csv({1.0}, {1.0, 2.0}), GridMismatch);
}
