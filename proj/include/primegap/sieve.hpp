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

/// @file sieve.hpp
/// @brief Segmented, bit-packed sieve of Eratosthenes over the odd integers.
///
/// Segments may be produced by several workers at once; consumers always see
/// them in ascending order, so everything computed downstream is independent
/// of the worker count.
#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace primegap {

/// Thrown when a request would exceed the configured memory budget.
class ResourceError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Largest accepted sieve limit.
inline constexpr std::uint64_t kMaxLimit = std::uint64_t{1} << 63;

/// One element of the gap stream: p is the n-th prime (1-based) and
/// g = p_{n+1} - p_n.
struct PrimeGap
{
    std::uint64_t n = 0;
    std::uint64_t p = 0;
    std::uint64_t g = 0;

    bool operator==(const PrimeGap&) const = default;
};

struct SievePlan
{
    std::uint64_t limit = 2;
    std::uint64_t segment_size = std::uint64_t{1} << 20;
    unsigned worker_count = 1;
    /// Upper bound in bytes for materialized prime lists.
    std::uint64_t memory_budget = std::uint64_t{2} << 30;

    /// Throws std::invalid_argument when the plan is unusable.
    void validate() const;
};

/// Where a gap stream resumes: primes strictly greater than `after`, the first
/// of which receives index `index + 1`. The default starts at p_1 = 2.
struct StreamStart
{
    std::uint64_t index = 0;
    std::uint64_t after = 0;
};

/// Returned by gap_stream. `last_index`/`last_prime` describe the largest prime
/// reached, which has no record of its own when the stream ran to completion.
struct GapStreamSummary
{
    std::uint64_t records = 0;
    std::uint64_t last_index = 0;
    std::uint64_t last_prime = 0;
    bool completed = true;
};

/// Called once per segment with that segment's primes in ascending order.
/// Returning false stops the sieve.
using SegmentSink = std::function<bool(std::span<const std::uint64_t>)>;

/// Called once per gap record. Returning false stops the stream after the
/// record has been consumed.
using GapSink = std::function<bool(const PrimeGap&)>;

/// Sieve the primes in [from, plan.limit] and hand them to `sink` segment by
/// segment, in ascending order regardless of plan.worker_count.
void sieve_segments(const SievePlan& plan, std::uint64_t from, const SegmentSink& sink);

/// Rough upper bound on pi(x), used for memory accounting.
std::uint64_t prime_count_upper_bound(std::uint64_t x);

/// Upper bound on the n-th prime (Rosser), valid for every n >= 1.
std::uint64_t nth_prime_upper_bound(std::uint64_t n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t x);
std::vector<std::uint64_t> primes_up_to(const SievePlan& plan);

std::uint64_t prime_count(std::uint64_t x);
std::uint64_t prime_count(const SievePlan& plan);

/// The n-th prime, searching only up to plan.limit. Throws std::out_of_range
/// when fewer than n primes lie in the plan.
std::uint64_t nth_prime(std::uint64_t n, const SievePlan& plan);
std::uint64_t nth_prime(std::uint64_t n);

/// Stream (n, p_n, g_n) for every prime whose successor is <= plan.limit.
GapStreamSummary gap_stream(const SievePlan& plan, const GapSink& sink, StreamStart start = {});

/// Write the raw "n,p,g" form of a gap stream (header line first).
GapStreamSummary write_gap_csv(const SievePlan& plan, std::ostream& out);

/// The primes up to a fixed limit, kept in memory for random access.
class PrimeTable
{
public:
    explicit PrimeTable(const SievePlan& plan);
    explicit PrimeTable(std::uint64_t limit);

    std::uint64_t limit() const { return limit_; }
    std::span<const std::uint64_t> primes() const { return primes_; }
    std::size_t size() const { return primes_.size(); }

    /// pi(x); throws std::out_of_range when x exceeds limit().
    std::uint64_t pi(std::uint64_t x) const;
    /// p_n, 1-based; throws std::out_of_range beyond the table.
    std::uint64_t nth(std::uint64_t n) const;

private:
    std::uint64_t limit_;
    std::vector<std::uint64_t> primes_;
};

} // namespace primegap
