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

#include "primegap/selberg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace primegap {

namespace {

std::uint64_t floor_sqrt(std::uint64_t x)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r > x / r)
        --r;
    while ((r + 1) <= x / (r + 1))
        ++r;
    return r;
}

SievePlan with_limit(SievePlan plan, std::uint64_t limit)
{
    plan.limit = std::max<std::uint64_t>(limit, 2);
    return plan;
}

} // namespace

SelbergTable::SelbergTable(const SievePlan& plan) : limit_(plan.limit)
{
    const std::uint64_t bytes = 3 * sizeof(double) * prime_count_upper_bound(plan.limit);
    if (bytes > plan.memory_budget)
        throw ResourceError("selberg table up to " + std::to_string(plan.limit) + " needs about " +
                            std::to_string(bytes) + " bytes, exceeding the memory budget of " +
                            std::to_string(plan.memory_budget) + " bytes");
    primes_ = primes_up_to(plan);
    theta_prefix_.reserve(primes_.size() + 1);
    s1_prefix_.reserve(primes_.size() + 1);
    theta_prefix_.push_back(0.0);
    s1_prefix_.push_back(0.0);
    CompensatedSum theta_acc;
    CompensatedSum s1_acc;
    for (const std::uint64_t p : primes_) {
        const double lp = std::log(static_cast<double>(p));
        theta_acc += lp;
        s1_acc += lp * lp;
        theta_prefix_.push_back(theta_acc.value());
        s1_prefix_.push_back(s1_acc.value());
    }
}

SelbergTable::SelbergTable(std::uint64_t limit) : SelbergTable(with_limit(SievePlan{}, limit)) {}

std::size_t SelbergTable::count_upto(std::uint64_t x) const
{
    return static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), x) -
                                    primes_.begin());
}

void SelbergTable::check_range(std::uint64_t x, const char* what) const
{
    if (x > limit_)
        throw std::out_of_range(std::string(what) + "(" + std::to_string(x) +
                                "): beyond the table limit " + std::to_string(limit_));
}

double SelbergTable::theta(std::uint64_t y) const
{
    check_range(y, "theta");
    return theta_prefix_[count_upto(y)];
}

double SelbergTable::s1(std::uint64_t x) const
{
    check_range(x, "s1");
    return s1_prefix_[count_upto(x)];
}

double SelbergTable::s2(std::uint64_t x, Pairing pairing) const
{
    check_range(x / 2, "s2");
    const std::uint64_t r = floor_sqrt(x);
    CompensatedSum acc;
    for (const std::uint64_t p : primes_) {
        if (p > r)
            break;
        acc += std::log(static_cast<double>(p)) * theta(x / p);
    }
    const double t = theta_prefix_[count_upto(r)];
    const double ordered = 2.0 * acc.value() - t * t;
    if (pairing == Pairing::ordered)
        return ordered;
    const double diagonal = s1_prefix_[count_upto(r)];
    return (ordered - diagonal) / 2.0 + diagonal;
}

double SelbergTable::s2_one_sided(std::uint64_t x) const
{
    check_range(x / 2, "s2");
    CompensatedSum acc;
    for (const std::uint64_t p : primes_) {
        if (p > x / 2)
            break;
        acc += std::log(static_cast<double>(p)) * theta(x / p);
    }
    return acc.value();
}

bool SelbergTable::lemma1_check(std::uint64_t x) const
{
    if (x < 4)
        throw std::domain_error("lemma1_check: x must be >= 4");
    return s2(x) < s1(x);
}

SelbergSums SelbergTable::sums_at(std::uint64_t x) const
{
    SelbergSums out;
    out.x = x;
    out.s1 = s1(x);
    out.s2 = s2(x, Pairing::ordered);
    out.s2_unordered = s2(x, Pairing::unordered);
    const double xd = static_cast<double>(x);
    out.residual_per_x = (out.s1 + out.s2 - 2.0 * xd * std::log(xd)) / xd;
    out.lemma1_holds = out.s2 < out.s1;
    return out;
}

double s1(std::uint64_t x)
{
    if (x < 2)
        throw std::domain_error("s1: x must be >= 2");
    return SelbergTable(x).s1(x);
}

double theta(std::uint64_t y) { return y < 2 ? 0.0 : SelbergTable(y).theta(y); }

double s2(std::uint64_t x, Pairing pairing)
{
    if (x < 4)
        throw std::domain_error("s2: x must be >= 4");
    return SelbergTable(x / 2).s2(x, pairing);
}

bool lemma1_check(std::uint64_t x)
{
    if (x < 4)
        throw std::domain_error("lemma1_check: x must be >= 4");
    return SelbergTable(x).lemma1_check(x);
}

std::vector<SelbergSums> selberg_residual_scan(std::span<const std::uint64_t> limits,
                                               const SievePlan& base)
{
    if (limits.empty())
        return {};
    for (std::size_t i = 0; i < limits.size(); ++i) {
        if (limits[i] < 4)
            throw std::invalid_argument("selberg_residual_scan: every limit must be >= 4");
        if (i > 0 && limits[i] < limits[i - 1])
            throw std::invalid_argument("selberg_residual_scan: limits must be ascending");
    }
    const SelbergTable table(with_limit(base, limits.back()));
    std::vector<SelbergSums> out;
    out.reserve(limits.size());
    for (const std::uint64_t x : limits)
        out.push_back(table.sums_at(x));
    return out;
}

Lemma1Sweep lemma1_sweep(const SelbergTable& table, std::uint64_t limit)
{
    if (limit < 4)
        throw std::domain_error("lemma1_sweep: limit must be >= 4");
    Lemma1Sweep out;
    out.limit = limit;
    bool first = true;
    auto check = [&](std::uint64_t x) {
        const double diff = table.s1(x) - table.s2(x);
        ++out.checked;
        if (!(diff > 0.0))
            out.failures.push_back(x);
        if (first || diff < out.min_difference) {
            out.min_difference = diff;
            out.min_difference_at = x;
            first = false;
        }
    };
    check(4);
    for (const std::uint64_t p : table.primes()) {
        if (p > limit)
            break;
        if (p < 5)
            continue;
        check(p - 1); // S1 is lowest relative to S2 just before a prime
        check(p);
    }
    return out;
}

std::vector<std::uint64_t> log_spaced_points(std::uint64_t lo, std::uint64_t hi, std::size_t count)
{
    std::vector<std::uint64_t> out;
    if (count == 0 || hi < lo)
        return out;
    if (count == 1 || hi == lo)
        return {hi};
    const double a = std::log(static_cast<double>(lo));
    const double b = std::log(static_cast<double>(hi));
    for (std::size_t i = 0; i < count; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(count - 1);
        auto x = static_cast<std::uint64_t>(std::llround(std::exp(a + (b - a) * t)));
        x = std::clamp(x, lo, hi);
        if (out.empty() || x > out.back())
            out.push_back(x);
    }
    if (out.back() != hi)
        out.push_back(hi);
    return out;
}

PartialSumRecord PartialSumState::consume(const PrimeGap& r)
{
    if (r.n != N + 1)
        throw std::logic_error("partial sums: records must arrive in index order");
    N = r.n;
    gap_sum += r.g;
    const double lp = std::log(static_cast<double>(r.p));
    logsq += lp * lp;
    const bool holds = static_cast<double>(gap_sum) < logsq.value();
    if (!holds)
        last_failure = N;
    if (gap_sum + 2 != r.p + r.g)
        identity_ok = false;
    return {N, gap_sum, logsq.value(), holds};
}

std::optional<std::uint64_t> PartialSumState::n0() const
{
    if (N == 0 || last_failure == N)
        return std::nullopt;
    return last_failure + 1;
}

namespace {

Theorem2Result run_partial_sums(const SievePlan& plan, std::uint64_t n_max, bool keep_records)
{
    Theorem2Result out;
    PartialSumState state;
    gap_stream(plan, [&](const PrimeGap& r) {
        const PartialSumRecord rec = state.consume(r);
        if (keep_records)
            out.records.push_back(rec);
        return n_max == 0 || state.N < n_max;
    });
    out.n_max = state.N;
    out.n0 = state.n0();
    out.identity_ok = state.identity_ok;
    return out;
}

} // namespace

Theorem2Result theorem2_scan(std::uint64_t n_max, bool keep_records, const SievePlan& base)
{
    if (n_max < 2)
        throw std::domain_error("theorem2_scan: n_max must be >= 2");
    return run_partial_sums(with_limit(base, nth_prime_upper_bound(n_max + 1)), n_max, keep_records);
}

Theorem2Result theorem2_scan_limit(std::uint64_t limit, bool keep_records, const SievePlan& base)
{
    if (limit < 3)
        throw std::domain_error("theorem2_scan_limit: limit must be >= 3");
    return run_partial_sums(with_limit(base, limit), 0, keep_records);
}

} // namespace primegap
