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

/// @file fluct.hpp
/// @brief Fluctuations of pi(x) around Li(x) and the scans built on them.
///
/// With L = log x:
///   f    = pi - Li
///   fhat = pi - x/L - x/L^2 - a x/L^3      (a = Constants::third_coefficient)
///   b    = fhat L^3 / x
///   k    = f / (sqrt(x) L)
///
/// Continuous-bound scans (Schoenfeld, Dusart, B) evaluate on the grid
/// {p, p - 1 : p prime <= limit}; pi is a step function, so extremes of the
/// normalized error sit on those jump edges.
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "primegap/analytic.hpp"
#include "primegap/sieve.hpp"

namespace primegap {

struct FluctuationSample
{
    std::uint64_t x = 0;
    std::uint64_t pi = 0;
    double li = 0.0;
    double f = 0.0;
    double fhat = 0.0;
    double b = 0.0;
    double k = 0.0;
};

/// Build a sample from pi(x) and Li(x).
FluctuationSample make_fluctuation(std::uint64_t x, std::uint64_t pi, double li_x,
                                   double third_coefficient = 2.0);

/// Throws std::out_of_range when x exceeds the table limit.
FluctuationSample fluctuation_at(std::uint64_t x, const PrimeTable& table, const Constants& k = {});
FluctuationSample fluctuation_at(std::uint64_t x, const Constants& k = {});

/// Delta at the prime p_n: the sum over q < p_n of (log^2 q - g(q)/c).
struct DeltaSample
{
    std::uint64_t n = 0;
    std::uint64_t p = 0;
    double delta = 0.0;
    double delta_lo = 0.0; ///< compensation term; delta + delta_lo is the running sum
    double delta_hat = 0.0; ///< delta - p log p + ((c+1)/c) p
};

struct DerivRecord
{
    std::uint64_t n = 0;
    std::uint64_t p = 0;
    double b_prime = 0.0;
    double k_prime = 0.0;
    double rhs19 = 0.0;
    double rhs24 = 0.0;
    bool ok19 = false;
    bool ok24 = false;
};

/// Summary of one exact scan. `violations` holds indices n for per-prime
/// scans and x values for grid scans.
struct ScanReport
{
    std::string scan;
    std::uint64_t limit = 0;
    double c = 0.0;
    std::vector<std::uint64_t> violations;
    double max_ratio = 0.0;
    std::uint64_t max_ratio_at = 0;
    std::map<std::string, double> thresholds;
    bool passed = false;
};

struct DeltaScan
{
    std::vector<DeltaSample> samples;
    std::vector<std::uint64_t> violations;
    double max_telescoping_error = 0.0;
};

enum class DerivSide { b, k };

/// Lowest primes from which conditions 19 and 24 are expected to hold at c = 1.
inline constexpr std::uint64_t kCondition19From = 5;
inline constexpr std::uint64_t kCondition24From = 3;

// Grid-scan cut-offs.
inline constexpr std::uint64_t kSchoenfeldFrom = 2657;
inline constexpr std::uint64_t kDusartLowerFrom = 32299;
inline constexpr std::uint64_t kDusartUpperFrom = 355991;

DeltaScan delta_scan(std::uint64_t limit, double c, const SievePlan& base = {});
ScanReport cg_scan(std::uint64_t limit, double c, const SievePlan& base = {});

/// One record per prime with a successor <= limit; both b and k sides filled.
std::vector<DerivRecord> bprime_records(std::uint64_t limit, double c, const SievePlan& base = {});
std::vector<DerivRecord> kprime_records(std::uint64_t limit, double c, const SievePlan& base = {});

/// Piecewise-linear interpolation of b' or k' between prime anchors.
/// Throws std::out_of_range outside [records.front().p, records.back().p].
double interpolate_derivative(double x, std::span<const DerivRecord> records,
                              DerivSide side = DerivSide::b);

/// Condition summaries without materializing records; violations are the n
/// with p_n above the expected-from prime and ok == false.
ScanReport condition19_scan(std::uint64_t limit, double c, const SievePlan& base = {});
ScanReport condition24_scan(std::uint64_t limit, double c, const SievePlan& base = {});

ScanReport schoenfeld_scan(std::uint64_t limit, const Constants& k = {}, const SievePlan& base = {});
ScanReport bbound_scan(std::uint64_t limit, const Constants& k = {}, const SievePlan& base = {});
ScanReport dusart_scan(std::uint64_t limit, const SievePlan& base = {});

} // namespace primegap
