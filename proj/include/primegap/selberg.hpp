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

/// @file selberg.hpp
/// @brief The sums S1(x) = sum log^2 p and S2(x) = sum_{pq <= x} log p log q,
/// the residual of S1 + S2 against 2 x log x, and the partial-sum scan of
/// gaps against log^2 p_n.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "primegap/compensated.hpp"
#include "primegap/sieve.hpp"

namespace primegap {

/// Whether S2 counts (p, q) and (q, p) separately.
enum class Pairing { ordered, unordered };

struct SelbergSums
{
    std::uint64_t x = 0;
    double s1 = 0.0;
    double s2 = 0.0;            ///< ordered pairs
    double s2_unordered = 0.0;
    double residual_per_x = 0.0; ///< (s1 + s2 - 2 x log x) / x, ordered s2
    bool lemma1_holds = false;   ///< s2 < s1
};

/// Prefix tables of log p and log^2 p over the primes up to a limit.
///
/// Every query is answered from the tables; x and y must not exceed limit().
class SelbergTable
{
public:
    explicit SelbergTable(const SievePlan& plan);
    explicit SelbergTable(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }
    std::span<const std::uint64_t> primes() const { return primes_; }

    /// sum of log p over p <= y
    double theta(std::uint64_t y) const;
    /// sum of log^2 p over p <= x
    double s1(std::uint64_t x) const;
    /// Ordered S2 via the hyperbola split:
    /// 2 sum_{p <= sqrt x} log p theta(x/p) - theta(sqrt x)^2.
    double s2(std::uint64_t x, Pairing pairing = Pairing::ordered) const;
    /// Ordered S2 as sum_{p <= x/2} log p theta(x/p). Slower; kept as a second route.
    double s2_one_sided(std::uint64_t x) const;
    bool lemma1_check(std::uint64_t x) const;
    SelbergSums sums_at(std::uint64_t x) const;

private:
    std::size_t count_upto(std::uint64_t x) const;
    void check_range(std::uint64_t x, const char* what) const;

    std::uint64_t limit_;
    std::vector<std::uint64_t> primes_;
    std::vector<double> theta_prefix_; // theta_prefix_[i] = sum over the first i primes
    std::vector<double> s1_prefix_;
};

double s1(std::uint64_t x);
double theta(std::uint64_t y);
double s2(std::uint64_t x, Pairing pairing = Pairing::ordered);
bool lemma1_check(std::uint64_t x);

/// SelbergSums at each limit (ascending, each >= 4), from one shared table.
std::vector<SelbergSums> selberg_residual_scan(std::span<const std::uint64_t> limits,
                                               const SievePlan& base = {});

/// S2 < S1 checked at x = 4 and at p - 1 and p for every prime 5 <= p <= limit.
struct Lemma1Sweep
{
    std::uint64_t limit = 0;
    std::uint64_t checked = 0;
    std::vector<std::uint64_t> failures;
    double min_difference = 0.0; ///< min of s1 - s2 over the checked points
    std::uint64_t min_difference_at = 0;
};

Lemma1Sweep lemma1_sweep(const SelbergTable& table, std::uint64_t limit);

/// `count` points spread logarithmically over [4, limit], deduplicated, ascending.
std::vector<std::uint64_t> log_spaced_points(std::uint64_t lo, std::uint64_t hi, std::size_t count);

struct PartialSumRecord
{
    std::uint64_t N = 0;
    std::uint64_t gap_sum = 0;
    double logsq_sum = 0.0;
    bool holds = false;
};

/// Running state of the sum g_n versus sum log^2 p_n comparison. Shared by the
/// stand-alone scan and the streaming engine.
struct PartialSumState
{
    std::uint64_t N = 0;
    std::uint64_t gap_sum = 0;
    CompensatedSum logsq;
    std::uint64_t last_failure = 0; ///< largest N with holds == false (0 if none)
    bool identity_ok = true;        ///< gap_sum + 2 == p_{N+1} at every step so far

    PartialSumRecord consume(const PrimeGap& r);

    /// Smallest N0 with holds for all N in [N0, N]; empty when the last
    /// record failed.
    std::optional<std::uint64_t> n0() const;
};

struct Theorem2Result
{
    std::vector<PartialSumRecord> records; ///< empty unless requested
    std::uint64_t n_max = 0;
    std::optional<std::uint64_t> n0;
    bool identity_ok = true;
};

/// Records for N = 1 .. n_max.
Theorem2Result theorem2_scan(std::uint64_t n_max, bool keep_records = true, const SievePlan& base = {});

/// Same scan for every N with p_{N+1} <= limit.
Theorem2Result theorem2_scan_limit(std::uint64_t limit, bool keep_records = false,
                                   const SievePlan& base = {});

} // namespace primegap
