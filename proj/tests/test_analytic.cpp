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
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "primegap/analytic.hpp"

using namespace primegap;
using doctest::Approx;

namespace {

long double closed_s1(long double x) { return x * std::log(x) - x - 2 * std::log(2.0L) + 2; }
long double closed_s2(long double x) { return x * std::log(x) - (2 + std::log(2.0L)) * x + 4; }

long double rhs(long double p, long double c, bool k_side)
{
    const long double L = std::log(p);
    const long double scale = k_side ? 1 / (std::sqrt(p) * L * L) : L * L / p;
    return -scale * (1 - 1 / (c * L));
}

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

} // namespace

TEST_SUITE("analytic")
{
TEST_CASE("li endpoints and domain")
{
    CHECK(li(2.0) == 0.0);
    CHECK_THROWS_AS(li(1.999), std::domain_error);
    CHECK(li(1e6) < li(1e6 + 1));
    CHECK(li(1e6) == Approx(78626.5).epsilon(1e-6));
}

TEST_CASE("li against the tanh-sinh oracle")
{
    for (double x : {2.5, 3.0, 3.999, 4.0, 4.001, 10.0, 100.0, 1e3, 1e4, 1e6, 1e8, 1e9, 1e12}) {
        INFO("x = " << x);
        CHECK(rel(li(x), oracle::li(x)) <= 1e-12);
    }
    CHECK(std::fabs(li(2.0000001) - oracle::li(2.0000001)) <= 1e-15);
}

TEST_CASE("li differences match quadrature over random intervals")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(std::log(2.0), std::log(1e9));
    for (int i = 0; i < 25; ++i) {
        double a = std::exp(u(rng)), b = std::exp(u(rng));
        if (a > b)
            std::swap(a, b);
        const double want = oracle::li(b) - oracle::li(a);
        if (want == 0.0)
            continue;
        CHECK(rel(li(b) - li(a), want) <= 1e-10);
    }
}

TEST_CASE("li_quadrature agrees with the fast path")
{
    for (double x : {2.0, 3.0, 50.0, 1e5, 1e7, 1e10})
        CHECK(std::fabs(li_quadrature(x) - li(x)) <= 1e-11 * std::max(1.0, li(x)));
}

TEST_CASE("series and asymptotic Ei branches meet smoothly")
{
    for (double u : {39.9, 39.999999, 40.0, 40.000001, 40.1}) {
        const double x = std::exp(u);
        CHECK(rel(li(x), oracle::li(x)) <= 1e-12);
    }
    CHECK(expint_ei(1.0) == Approx(1.8951178163559367555).epsilon(1e-14));
}

TEST_CASE("smooth sums")
{
    CHECK(smooth_s1(2.0) == Approx(0.0).epsilon(1e-12));
    CHECK(smooth_s1(std::numbers::e) == Approx(2 - 2 * std::numbers::ln2).epsilon(1e-12));
    CHECK(smooth_s2(4.0) == Approx(4 * std::numbers::ln2 - 4).epsilon(1e-12));
    CHECK(smooth_s1(104729.0) == Approx(static_cast<double>(closed_s1(104729.0L))).epsilon(1e-12));
    CHECK(smooth_s2(104729.0) == Approx(static_cast<double>(closed_s2(104729.0L))).epsilon(1e-12));
}

TEST_CASE("smooth difference is linear in x")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(std::log(4.0), std::log(1e12));
    for (int i = 0; i < 20; ++i) {
        const double x = std::exp(u(rng));
        const double lhs = smooth_s1(x) - smooth_s2(x);
        const double rhs_ = (1 + std::numbers::ln2) * x - 2 * std::numbers::ln2 - 2;
        CHECK(rel(lhs, rhs_) <= 1e-9);
        CHECK(rel(smooth_s1(x), static_cast<double>(closed_s1(x))) <= 1e-14);
    }
    CHECK(smooth_s1(1e3) - smooth_s2(1e3) == Approx((1 + std::numbers::ln2) * 1e3 - 2 * std::numbers::ln2 - 2));
}

TEST_CASE("Dusart bounds")
{
    for (double x : {1e3, 1e6, 4e5, 1e10}) {
        const auto b = dusart_bounds(x);
        const double L = std::log(x);
        CHECK(b.upper - b.lower == Approx(0.71 * x / (L * L * L)).epsilon(1e-10));
        CHECK(b.lower == Approx(x / L + x / (L * L) + 1.8 * x / (L * L * L)).epsilon(1e-14));
    }
    const auto m = dusart_bounds(1e6);
    CHECK(m.lower < 78498.0);
    CHECK(78498.0 < m.upper);
    const auto f = dusart_bounds(400000.0);
    CHECK(f.lower < 33860.0);
    CHECK(33860.0 < f.upper);
}

TEST_CASE("monotonicity threshold")
{
    CHECK(monotonicity_threshold(1, 5) == Approx(16.31).epsilon(0.01 / 16.31));
    CHECK(monotonicity_threshold(1, 0) == Approx(std::numbers::e));
    CHECK(monotonicity_threshold(2, 5) == Approx(std::exp(0.25 + std::sqrt(0.0625 + 5.0))).epsilon(1e-14));
    CHECK_THROWS_AS(monotonicity_threshold(0, 5), std::domain_error);
    CHECK_THROWS_AS(monotonicity_threshold(1, -1), std::domain_error);
}

TEST_CASE("threshold is increasing in B and decreasing in c")
{
    for (double c = 0.5; c <= 3.0; c += 0.25)
        for (double B = 0.0; B <= 10.0; B += 0.5) {
            CHECK(monotonicity_threshold(c, B + 0.5) > monotonicity_threshold(c, B));
            CHECK(monotonicity_threshold(c + 0.25, B) < monotonicity_threshold(c, B));
        }
}

TEST_CASE("condition right-hand sides")
{
    CHECK(std::fabs(condition19_rhs(std::numbers::e, 1.0)) <= 1e-16);
    CHECK(std::fabs(condition24_rhs(std::exp(0.5), 2.0)) <= 1e-16);
    CHECK(condition19_rhs(101, 1) == Approx(static_cast<double>(rhs(101, 1, false))).epsilon(1e-14));
    CHECK(condition24_rhs(101, 1) == Approx(static_cast<double>(rhs(101, 1, true))).epsilon(1e-14));
    for (double c : {1.0, 1.1229, 2.0}) {
        double prev19 = -1e300, prev24 = -1e300;
        for (double p = std::exp(1 / c) * 1.01; p < 1e12; p *= 1.3) {
            CHECK(condition19_rhs(p, c) < 0);
            CHECK(condition24_rhs(p, c) < 0);
            if (p > 10) {
                CHECK(condition24_rhs(p, c) > prev24);
                prev24 = condition24_rhs(p, c);
            }
            if (p > 100) {
                CHECK(condition19_rhs(p, c) > prev19);
                prev19 = condition19_rhs(p, c);
            }
        }
        CHECK(std::fabs(condition19_rhs(1e12, c)) < 1e-9);
        CHECK(std::fabs(condition24_rhs(1e12, c)) < 1e-8);
    }
}

TEST_CASE("|rhs24| decreases on [10, 10^6]")
{
    double prev = std::fabs(condition24_rhs(10, 1));
    for (double p = 11; p <= 1e6; p *= 1.01) {
        const double cur = std::fabs(condition24_rhs(p, 1));
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("Skewes map")
{
    CHECK(skewes_log10(1.3) == Approx(17.0).epsilon(0.1 / 17.0));
    CHECK(skewes_log10(1.5) == Approx(38.4).epsilon(0.1 / 38.4));
    CHECK(skewes_log10(2.0) == Approx(702.8).epsilon(0.5 / 702.8));
    CHECK(skewes_log10(1.5) / skewes_log10(1.3) > 2.0);
    CHECK_THROWS_AS(skewes_log10(7.0), std::overflow_error);
    CHECK(skewes_mean_kprime(1e14) == Approx(3.98e-16).epsilon(0.01));
    CHECK(skewes_mean_kprime(1 / (8 * std::numbers::pi)) == Approx(1.0));
    CHECK(skewes_mean_kprime(2e14) == Approx(skewes_mean_kprime(1e14) / 2));
}

TEST_CASE("constants")
{
    Constants k;
    CHECK_NOTHROW(k.validate());
    CHECK(k.K_rh == Approx(1 / (8 * std::numbers::pi)));
    CHECK(k.granville_c == Approx(2 * std::exp(-0.57721566490153286)).epsilon(1e-6));
    k.K_rh = 0.5;
    CHECK_THROWS_AS(k.validate(), std::invalid_argument);
    k = Constants{};
    k.B = 0;
    CHECK_THROWS_AS(k.validate(), std::invalid_argument);
}
}
