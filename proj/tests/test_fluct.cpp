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

#include "oracles.hpp"
#include "primegap/fluct.hpp"

using namespace primegap;
using doctest::Approx;

namespace {

SievePlan workers(unsigned w)
{
    SievePlan p;
    p.worker_count = w;
    p.segment_size = 1u << 14;
    return p;
}

// k and b from the oracle Li and a trial-division count
std::pair<double, double> bk_oracle(std::uint64_t x, std::size_t pi)
{
    const double xd = static_cast<double>(x), L = std::log(xd);
    const double fhat = static_cast<double>(pi) - xd / L - xd / (L * L) - 2 * xd / (L * L * L);
    return {fhat * L * L * L / xd, (static_cast<double>(pi) - oracle::li(xd)) / (std::sqrt(xd) * L)};
}

} // namespace

TEST_SUITE("fluct")
{
TEST_CASE("fluctuation samples")
{
    const auto s2 = fluctuation_at(2);
    CHECK(s2.pi == 1);
    CHECK(s2.li == 0.0);
    CHECK(s2.f == 1.0);

    const auto s = fluctuation_at(1000000);
    CHECK(s.pi == 78498);
    CHECK(s.li == Approx(oracle::li(1e6)).epsilon(1e-12));
    CHECK(s.fhat == Approx(118.0).epsilon(0.5 / 118.0));
    CHECK(s.b == Approx(0.311).epsilon(0.001 / 0.311));
    CHECK(s.k == Approx(-0.0093).epsilon(0.0001 / 0.0093));
    const auto [b, k] = bk_oracle(1000000, 78498);
    CHECK(s.b == Approx(b).epsilon(1e-12));
    CHECK(s.k == Approx(k).epsilon(1e-9));
    CHECK_THROWS_AS(fluctuation_at(1), std::domain_error);
}

TEST_CASE("sign of k follows sign of f")
{
    const PrimeTable t(20000);
    for (std::uint64_t x = 2; x <= 20000; x += 7) {
        const auto s = fluctuation_at(x, t);
        CHECK(std::signbit(s.k) == std::signbit(s.f));
        CHECK(std::isfinite(s.b));
        if (x >= 1000)
            CHECK(s.k < 0);
    }
}

TEST_CASE("delta scan small cases")
{
    const auto d = delta_scan(100, 1.0);
    CHECK(d.violations == std::vector<std::uint64_t>{1, 2, 4});
    REQUIRE(d.samples.size() >= 2);
    // Delta(p_1) = 0, Delta(p_2) = log^2 2 - 1
    CHECK(d.samples[0].p == 2);
    CHECK(d.samples[0].delta == 0.0);
    CHECK(d.samples[1].p == 3);
    CHECK(d.samples[1].delta + d.samples[1].delta_lo == Approx(std::log(2.0) * std::log(2.0) - 1.0));
    CHECK(d.max_telescoping_error <= 1e-9);
}

TEST_CASE("delta telescopes and agrees with D(N)")
{
    const auto d = delta_scan(1000000, 1.0);
    CHECK(d.max_telescoping_error <= 1e-9);
    const auto ps = oracle::primes(2000);
    long double D = 0;
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
        // Delta(p_{N+1}) = sum_{n <= N} (log^2 p_n - g_n)
        const long double L = std::log(static_cast<long double>(ps[i]));
        D += L * L - static_cast<long double>(ps[i + 1] - ps[i]);
        const auto& s = d.samples[i + 1];
        CHECK(s.p == ps[i + 1]);
        CHECK(s.delta + s.delta_lo == Approx(static_cast<double>(D)).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("delta and gap-ratio violations coincide")
{
    for (double c : {0.5, 1.0, 1.122918, 2.0}) {
        INFO("c = " << c);
        CHECK(delta_scan(300000, c).violations == cg_scan(300000, c).violations);
    }
}

TEST_CASE("gap ratio scan")
{
    const auto r = cg_scan(1000000, 1.0);
    CHECK(r.violations == std::vector<std::uint64_t>{1, 2, 4});
    CHECK_FALSE(r.passed);
    CHECK(r.thresholds.at("max_ratio_all_n") == Approx(1 / (std::log(2.0) * std::log(2.0))));
    CHECK(r.max_ratio < 0.9206386);
    const auto g = cg_scan(1000000, 1.122918);
    for (auto n : g.violations)
        CHECK(std::find(r.violations.begin(), r.violations.end(), n) != r.violations.end());
    CHECK_THROWS_AS(cg_scan(2, 1.0), std::domain_error);
}

TEST_CASE("derivative records")
{
    const auto recs = bprime_records(1000000, 1.0);
    REQUIRE(recs.size() == 78497);
    const PrimeTable t(1000000);
    for (std::size_t i = 0; i < recs.size(); i += 997) {
        const auto& r = recs[i];
        const auto a = fluctuation_at(r.p, t);
        const auto b = fluctuation_at(t.nth(r.n + 1), t);
        const double dx = static_cast<double>(b.x - a.x);
        CHECK(r.b_prime == Approx((b.b - a.b) / dx).epsilon(1e-12).scale(1e-12));
        CHECK(r.k_prime == Approx((b.k - a.k) / dx).epsilon(1e-12).scale(1e-12));
        CHECK(r.rhs19 == condition19_rhs(static_cast<double>(r.p), 1.0));
        CHECK(r.rhs24 == condition24_rhs(static_cast<double>(r.p), 1.0));
    }
    for (const auto& r : recs) {
        if (r.p > kCondition19From)
            CHECK(r.ok19);
        if (r.p > kCondition24From)
            CHECK(r.ok24);
        if (r.p > std::exp(1.0) && r.k_prime >= 0)
            CHECK(r.ok24);
    }
}

TEST_CASE("twin-prime derivatives are half the jump")
{
    const auto recs = kprime_records(10000, 1.0);
    const PrimeTable t(10000);
    for (const auto& r : recs) {
        if (t.nth(r.n + 1) - r.p != 2)
            continue;
        const double jump = fluctuation_at(r.p + 2, t).k - fluctuation_at(r.p, t).k;
        CHECK(std::fabs(r.k_prime) <= std::fabs(jump) / 2 * (1 + 1e-12));
    }
}

TEST_CASE("derivative records are independent of worker count")
{
    const auto a = kprime_records(2000000, 1.0, workers(1));
    for (unsigned w : {2u, 8u}) {
        const auto b = kprime_records(2000000, 1.0, workers(w));
        REQUIRE(a.size() == b.size());
        bool same = true;
        for (std::size_t i = 0; i < a.size(); ++i)
            same = same && a[i].b_prime == b[i].b_prime && a[i].k_prime == b[i].k_prime;
        CHECK(same);
    }
}

TEST_CASE("condition scans")
{
    CHECK(condition19_scan(1000000, 1.0).passed);
    CHECK(condition24_scan(1000000, 1.0).passed);
    CHECK_THROWS_AS(condition19_scan(6, 1.0), std::domain_error);
    CHECK_THROWS_AS(condition24_scan(4, 1.0), std::domain_error);
}

TEST_CASE("interpolation between anchors")
{
    const auto recs = kprime_records(1000, 1.0);
    CHECK(interpolate_derivative(2.0, recs, DerivSide::k) == recs[0].k_prime);
    CHECK(interpolate_derivative(7.0, recs, DerivSide::b) == recs[3].b_prime);
    CHECK(interpolate_derivative(9.0, recs, DerivSide::k) == Approx((recs[3].k_prime + recs[4].k_prime) / 2));
    for (std::size_t i = 1; i + 1 < recs.size(); ++i) {
        const double p = static_cast<double>(recs[i].p);
        CHECK(interpolate_derivative(p - 1e-9, recs, DerivSide::k) ==
              Approx(interpolate_derivative(p + 1e-9, recs, DerivSide::k)).epsilon(1e-6).scale(1e-6));
    }
    CHECK_THROWS_AS(interpolate_derivative(1.5, recs, DerivSide::k), std::out_of_range);
    CHECK_THROWS_AS(interpolate_derivative(998.0, recs, DerivSide::k), std::out_of_range);
}

TEST_CASE("Schoenfeld scan")
{
    const auto r = schoenfeld_scan(1000000);
    CHECK(r.passed);
    CHECK(r.violations.empty());
    CHECK(r.max_ratio <= 1 / (8 * std::numbers::pi));
    CHECK(r.thresholds.at("max_ratio_all_x") == Approx(1 / (std::sqrt(2.0) * std::log(2.0))));
    CHECK(r.thresholds.at("max_ratio_all_x") > 1.0 / 3.0);
    CHECK(r.thresholds.at("x_star_K_all") == 4.0);
    // pinned regression: largest ratio over [10^4, 10^6]
    CHECK(r.thresholds.at("max_ratio_from_1e4") == Approx(0.026721534427544498).epsilon(1e-12));
    CHECK(r.thresholds.at("max_ratio_from_1e4_at") == 11776.0);
}

TEST_CASE("b bound scan")
{
    const auto r = bbound_scan(1000000);
    CHECK(r.passed);
    CHECK(r.max_ratio < 5.0);
    CHECK(r.max_ratio_at < 1000);
    // pinned regression
    CHECK(r.max_ratio_at == 10);
    CHECK(r.max_ratio == Approx(4.7212545819680996).epsilon(1e-12));
    const auto s = fluctuation_at(1000000);
    CHECK(s.b == Approx(0.311).epsilon(0.01));
}

TEST_CASE("Dusart scan")
{
    const auto r = dusart_scan(10000000);
    CHECK(r.passed);
    CHECK(r.violations.empty());
    CHECK_THROWS_AS(dusart_scan(355991), std::domain_error);
}
}
