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

#include <numeric>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "primegap/csv.hpp"
#include "primegap/sieve.hpp"

using namespace primegap;

namespace {

SievePlan plan(std::uint64_t limit, unsigned workers = 1, std::uint64_t segment = 1u << 20)
{
    SievePlan p;
    p.limit = limit;
    p.worker_count = workers;
    p.segment_size = segment;
    return p;
}

std::vector<PrimeGap> collect(const SievePlan& p, StreamStart start = {})
{
    std::vector<PrimeGap> out;
    gap_stream(p, [&](const PrimeGap& g) { out.push_back(g); return true; }, start);
    return out;
}

} // namespace

TEST_SUITE("sieve")
{
TEST_CASE("small prime lists")
{
    CHECK(primes_up_to(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(0).empty());
    CHECK(primes_up_to(2) == std::vector<std::uint64_t>{2});
    CHECK(primes_up_to(3) == std::vector<std::uint64_t>{2, 3});
}

TEST_CASE("agrees with trial division below 10^5")
{
    const auto expected = oracle::primes(100000);
    CHECK(primes_up_to(100000) == expected);
    // awkward segment sizes still give the same set
    for (std::uint64_t seg : {64u, 100u, 1000u, 65536u})
        CHECK(primes_up_to(plan(100000, 3, seg)) == expected);
}

TEST_CASE("p_10000")
{
    const auto ps = primes_up_to(104729);
    CHECK(ps.size() == 10000);
    CHECK(ps.back() == 104729);
    CHECK(nth_prime(1) == 2);
    CHECK(nth_prime(4) == 7);
    CHECK(nth_prime(10000) == 104729);
}

TEST_CASE("prime_count")
{
    CHECK(prime_count(0) == 0);
    CHECK(prime_count(1) == 0);
    CHECK(prime_count(2) == 1);
    CHECK(prime_count(100) == 25);
    CHECK(prime_count(1000000) == 78498);
    CHECK(prime_count(plan(1000000, 8, 4096)) == 78498);
}

TEST_CASE("prime_count matches the prime list at random x")
{
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::uint64_t> dist(0, 300000);
    for (int i = 0; i < 40; ++i) {
        const auto x = dist(rng);
        CHECK(prime_count(x) == primes_up_to(x).size());
    }
}

TEST_CASE("nth_prime beyond the plan")
{
    CHECK_THROWS_AS(nth_prime(100, plan(100)), std::out_of_range);
    CHECK(nth_prime(25, plan(100)) == 97);
}

TEST_CASE("plan validation and the memory budget")
{
    SievePlan p = plan(100);
    p.segment_size = 32;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = plan(100, 0);
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = plan(kMaxLimit + 1);
    CHECK_THROWS(p.validate());

    p = plan(10000000);
    p.memory_budget = 1024;
    try {
        primes_up_to(p);
        FAIL("expected a resource error");
    } catch (const ResourceError& e) {
        CHECK(std::string(e.what()).find("1024") != std::string::npos);
    }
}

TEST_CASE("gap stream records")
{
    const auto gaps = collect(plan(100));
    REQUIRE(gaps.size() == 24);
    CHECK(gaps[0] == PrimeGap{1, 2, 1});
    CHECK(gaps[3] == PrimeGap{4, 7, 4});
    CHECK(collect(plan(1000000)).size() == 78497);
}

TEST_CASE("gap stream invariants")
{
    const auto gaps = collect(plan(200000, 2, 4096));
    const auto ps = oracle::primes(200000);
    REQUIRE(gaps.size() == ps.size() - 1);
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        CHECK(gaps[i].n == i + 1);
        CHECK(gaps[i].p == ps[i]);
        CHECK(gaps[i].p + gaps[i].g == ps[i + 1]);
        if (i > 0)
            CHECK(gaps[i].g % 2 == 0);
        total += gaps[i].g;
    }
    CHECK(gaps[0].g == 1);
    CHECK(total == ps.back() - 2);
}

TEST_CASE("gap stream is independent of worker count")
{
    std::string reference;
    for (unsigned w : {1u, 2u, 8u}) {
        std::ostringstream os;
        write_gap_csv(plan(3000000, w, 1u << 16), os);
        if (w == 1)
            reference = os.str();
        else
            CHECK(os.str() == reference);
    }
    CHECK(reference.rfind("n,p,g\n1,2,1\n2,3,2\n", 0) == 0);
}

TEST_CASE("gap stream resumes from a position")
{
    const auto all = collect(plan(500000, 2, 8192));
    const PrimeGap& mid = all[20000];
    const auto tail = collect(plan(500000, 2, 8192), StreamStart{mid.n, mid.p});
    REQUIRE(tail.size() == all.size() - 20001);
    CHECK(std::equal(tail.begin(), tail.end(), all.begin() + 20001));
}

TEST_CASE("consumer can stop early")
{
    std::uint64_t seen = 0;
    const auto s = gap_stream(plan(1000000), [&](const PrimeGap&) { return ++seen < 10; });
    CHECK(seen == 10);
    CHECK_FALSE(s.completed);
}

TEST_CASE("prime table")
{
    const PrimeTable t(1000);
    CHECK(t.size() == 168);
    CHECK(t.pi(1) == 0);
    CHECK(t.pi(997) == 168);
    CHECK(t.pi(996) == 167);
    CHECK(t.nth(1) == 2);
    CHECK(t.nth(168) == 997);
    CHECK_THROWS_AS(t.nth(169), std::out_of_range);
    CHECK_THROWS_AS(t.pi(1001), std::out_of_range);
}

TEST_CASE("csv rows are locale independent and round-trip")
{
    CsvRow row;
    row << std::uint64_t{7} << 0.1 << true << -2.5e-300;
    CHECK(row.str() == "7,0.1,true,-2.5e-300");
}
}
