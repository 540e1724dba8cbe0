// Copyright 2026 The primegap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "primegap/analytic.hpp"
#include "primegap/engine.hpp"
#include "primegap/fit.hpp"

using namespace primegap;
using doctest::Approx;

namespace {

double lll(double log_x) { return std::log(std::log(log_x)); }

std::vector<BinnedPoint> exact_model(double A, double alpha, int n)
{
    std::vector<BinnedPoint> pts;
    for (int i = 0; i < n; ++i) {
        const double lx = std::log(1e4) + i * (std::log(1e10) - std::log(1e4)) / (n - 1);
        pts.push_back({lx, -A * (alpha - lll(lx)), 1});
    }
    return pts;
}

std::vector<FluctuationSample> samples(std::vector<std::pair<std::uint64_t, double>> xk)
{
    std::vector<FluctuationSample> out;
    for (auto [x, k] : xk) {
        FluctuationSample s;
        s.x = x;
        s.k = k;
        out.push_back(s);
    }
    return out;
}

} // namespace

TEST_SUITE("fit")
{
TEST_CASE("exact model is recovered")
{
    const auto r = fit_skewes(exact_model(0.2, 1.4, 20));
    CHECK(std::fabs(r.A - 0.2) <= 1e-9);
    CHECK(std::fabs(r.alpha - 1.4) <= 1e-9);
    CHECK(r.rms_residual <= 1e-12);
    CHECK(std::fabs(r.log10_sk1 - skewes_log10(r.alpha)) <= 1e-9);
    REQUIRE(r.alpha_shift_drop_last.has_value());
    CHECK(std::fabs(*r.alpha_shift_drop_last) <= 1e-9);
}

TEST_CASE("alpha 1.3 maps to 10^17")
{
    const auto r = fit_skewes(exact_model(0.05, 1.3, 10));
    CHECK(r.log10_sk1 == Approx(17.0).epsilon(0.1 / 17.0));
}

TEST_CASE("matches a QR solve on noisy data")
{
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> noise(0.0, 0.01);
    for (int trial = 0; trial < 20; ++trial) {
        auto pts = exact_model(0.1 + 0.01 * trial, 1.0 + 0.03 * trial, 15);
        std::vector<double> u, y;
        for (auto& p : pts) {
            p.mean_k += noise(rng);
            u.push_back(lll(p.log_x));
            y.push_back(p.mean_k);
        }
        const auto [c0, c1] = oracle::line_fit(u, y);
        const auto r = fit_skewes(pts);
        CHECK(r.A == Approx(c1).epsilon(1e-12));
        CHECK(r.alpha == Approx(-c0 / c1).epsilon(1e-10));
    }
}

TEST_CASE("degenerate inputs")
{
    CHECK_THROWS_AS(fit_skewes(exact_model(0.2, 1.4, 2)), InsufficientDataError);
    std::vector<BinnedPoint> same(5, BinnedPoint{10.0, -0.01, 1});
    CHECK_THROWS_AS(fit_skewes(same), SingularFitError);
    auto low = exact_model(0.2, 1.4, 5);
    low[0].log_x = 2.0;
    CHECK_THROWS_AS(fit_skewes(low), std::domain_error);
}

TEST_CASE("binning")
{
    auto s = samples({{100, -0.01}, {1000, -0.03}, {10000, -0.02}});
    const auto one = bin_average_k(s, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].mean_k == Approx(-0.02));
    CHECK(one[0].count == 3);

    std::vector<std::pair<std::uint64_t, double>> flat;
    for (int i = 0; i < 1000; ++i)
        flat.push_back({static_cast<std::uint64_t>(std::exp(std::log(1e3) + i * std::log(1e3) / 999)), -0.01});
    const auto bins = bin_average_k(samples(flat), 20);
    CHECK(bins.size() == 20);
    for (const auto& b : bins)
        CHECK(b.mean_k == Approx(-0.01));

    CHECK_THROWS_AS(bin_average_k({}, 5), InsufficientDataError);
    CHECK_THROWS_AS(bin_average_k(samples({{10, 0.0}}), 1), std::domain_error);
    CHECK_THROWS_AS(bin_average_k(samples({{100, 0.0}, {50, 0.0}}), 1), std::invalid_argument);
    CHECK_THROWS_AS(bin_average_k(samples({{100, 0.0}}), 0), std::invalid_argument);
}

TEST_CASE("empty bins are dropped")
{
    const auto bins = bin_average_k(samples({{100, -1.0}, {101, -1.0}, {1000000, -3.0}}), 10);
    CHECK(bins.size() == 2);
}

TEST_CASE("real data over [10^4, 10^7]")
{
    EngineOptions o;
    o.limit = 10000000;
    o.scans = scans::fit;
    o.fit.x_max = 1e7;
    ScanEngine e(o);
    SievePlan p;
    p.limit = o.limit;
    e.run(p);
    const auto r = fit_skewes(bin_average_k(e.fit_samples(), 20));
    CHECK(r.A > 0);
    CHECK(r.alpha >= 1.0);
    CHECK(r.alpha <= 1.8);
}
}
