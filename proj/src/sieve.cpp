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

#include "primegap/sieve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>
#include <thread>

#include "primegap/csv.hpp"

namespace primegap {

namespace {

std::uint64_t isqrt(std::uint64_t x)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r > x / r)
        --r;
    while ((r + 1) <= x / (r + 1))
        ++r;
    return r;
}

// Odd primes up to n with a plain byte sieve. n is at most sqrt(kMaxLimit).
std::vector<std::uint64_t> odd_base_primes(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    if (n < 3)
        return out;
    std::vector<std::uint8_t> composite(n / 2 + 1, 0); // index i <-> 2i+1
    for (std::uint64_t i = 1; 2 * i + 1 <= n; ++i) {
        if (composite[i])
            continue;
        const std::uint64_t q = 2 * i + 1;
        out.push_back(q);
        for (std::uint64_t m = q * q; m <= n; m += 2 * q)
            composite[m / 2] = 1;
    }
    return out;
}

class SegmentSieve
{
public:
    SegmentSieve(std::uint64_t from, std::uint64_t limit, std::uint64_t span)
        : from_(from), limit_(limit), base_(from & ~std::uint64_t{1}),
          span_((span + 127) / 128 * 128), primes_(odd_base_primes(isqrt(limit)))
    {
    }

    std::uint64_t segment_count() const
    {
        if (from_ > limit_)
            return 0;
        return (limit_ - base_) / span_ + 1;
    }

    // Primes in segment k, ascending.
    void run(std::uint64_t k, std::vector<std::uint64_t>& out) const
    {
        out.clear();
        const std::uint64_t lo = base_ + k * span_;
        const std::uint64_t hi = std::min(lo + span_, limit_ + 1); // exclusive
        const std::uint64_t odd_count = (hi - lo) / 2;             // odds lo+1, lo+3, ...
        std::vector<std::uint64_t> marks((odd_count + 63) / 64, 0);

        if (lo == 0 && odd_count > 0)
            marks[0] |= 1; // 1 is not prime
        for (const std::uint64_t q : primes_) {
            if (q * q >= hi)
                break;
            std::uint64_t m = q * q;
            if (m < lo) {
                m = (lo + q - 1) / q * q;
                if ((m & 1) == 0)
                    m += q;
            }
            for (std::uint64_t j = (m - lo - 1) / 2; j < odd_count; j += q)
                marks[j >> 6] |= std::uint64_t{1} << (j & 63);
        }

        if (lo <= 2 && 2 < hi && from_ <= 2)
            out.push_back(2);
        for (std::size_t w = 0; w < marks.size(); ++w) {
            std::uint64_t bits = ~marks[w];
            if (w + 1 == marks.size() && odd_count % 64 != 0)
                bits &= (std::uint64_t{1} << (odd_count % 64)) - 1;
            while (bits) {
                const int b = std::countr_zero(bits);
                bits &= bits - 1;
                const std::uint64_t v = lo + 1 + 2 * (64 * w + static_cast<std::uint64_t>(b));
                if (v >= from_)
                    out.push_back(v);
            }
        }
    }

private:
    std::uint64_t from_;
    std::uint64_t limit_;
    std::uint64_t base_;
    std::uint64_t span_;
    std::vector<std::uint64_t> primes_;
};

} // namespace

void SievePlan::validate() const
{
    if (limit < 2)
        throw std::invalid_argument("sieve plan: limit must be >= 2");
    if (limit > kMaxLimit)
        throw std::invalid_argument("sieve plan: limits above 2^63 are not supported");
    if (segment_size < 64)
        throw std::invalid_argument("sieve plan: segment_size must be >= 64");
    if (worker_count < 1)
        throw std::invalid_argument("sieve plan: worker_count must be >= 1");
}

void sieve_segments(const SievePlan& plan, std::uint64_t from, const SegmentSink& sink)
{
    plan.validate();
    const std::uint64_t base_bytes = isqrt(plan.limit) / 2 + 1;
    if (base_bytes > plan.memory_budget)
        throw ResourceError("sieve: base-prime table needs " + std::to_string(base_bytes) +
                            " bytes, exceeding the memory budget of " +
                            std::to_string(plan.memory_budget) + " bytes");

    const SegmentSieve sieve(std::max<std::uint64_t>(from, 1), plan.limit, plan.segment_size);
    const std::uint64_t total = sieve.segment_count();
    const std::uint64_t workers = plan.worker_count;
    std::vector<std::vector<std::uint64_t>> batch(workers);

    for (std::uint64_t first = 0; first < total; first += workers) {
        const std::uint64_t count = std::min(workers, total - first);
        if (count == 1) {
            sieve.run(first, batch[0]);
        } else {
            std::vector<std::jthread> threads;
            threads.reserve(count);
            for (std::uint64_t t = 0; t < count; ++t)
                threads.emplace_back([&, t] { sieve.run(first + t, batch[t]); });
        }
        // jthreads joined above; release in segment order
        for (std::uint64_t t = 0; t < count; ++t)
            if (!sink(batch[t]))
                return;
    }
}

std::uint64_t prime_count_upper_bound(std::uint64_t x)
{
    if (x < 17)
        return 7;
    const double xd = static_cast<double>(x);
    return static_cast<std::uint64_t>(1.25506 * xd / std::log(xd)) + 1;
}

std::uint64_t nth_prime_upper_bound(std::uint64_t n)
{
    if (n < 6)
        return 13;
    const double nd = static_cast<double>(n);
    return static_cast<std::uint64_t>(nd * (std::log(nd) + std::log(std::log(nd)))) + 1;
}

std::vector<std::uint64_t> primes_up_to(const SievePlan& plan)
{
    const std::uint64_t bytes = prime_count_upper_bound(plan.limit) * sizeof(std::uint64_t);
    if (bytes > plan.memory_budget)
        throw ResourceError("primes_up_to(" + std::to_string(plan.limit) + "): needs about " +
                            std::to_string(bytes) + " bytes, exceeding the memory budget of " +
                            std::to_string(plan.memory_budget) + " bytes");
    std::vector<std::uint64_t> out;
    out.reserve(prime_count_upper_bound(plan.limit));
    sieve_segments(plan, 2, [&](std::span<const std::uint64_t> seg) {
        out.insert(out.end(), seg.begin(), seg.end());
        return true;
    });
    return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t x)
{
    if (x < 2)
        return {};
    SievePlan plan;
    plan.limit = x;
    return primes_up_to(plan);
}

std::uint64_t prime_count(const SievePlan& plan)
{
    std::uint64_t count = 0;
    sieve_segments(plan, 2, [&](std::span<const std::uint64_t> seg) {
        count += seg.size();
        return true;
    });
    return count;
}

std::uint64_t prime_count(std::uint64_t x)
{
    if (x < 2)
        return 0;
    SievePlan plan;
    plan.limit = x;
    return prime_count(plan);
}

std::uint64_t nth_prime(std::uint64_t n, const SievePlan& plan)
{
    if (n < 1)
        throw std::invalid_argument("nth_prime: n must be >= 1");
    std::uint64_t seen = 0;
    std::uint64_t found = 0;
    sieve_segments(plan, 2, [&](std::span<const std::uint64_t> seg) {
        if (seen + seg.size() >= n) {
            found = seg[n - seen - 1];
            return false;
        }
        seen += seg.size();
        return true;
    });
    if (found == 0)
        throw std::out_of_range("nth_prime(" + std::to_string(n) + "): only " +
                                std::to_string(seen) + " primes up to " +
                                std::to_string(plan.limit) + "; use a sieve plan with a larger limit");
    return found;
}

std::uint64_t nth_prime(std::uint64_t n)
{
    SievePlan plan;
    plan.limit = nth_prime_upper_bound(n);
    return nth_prime(n, plan);
}

GapStreamSummary gap_stream(const SievePlan& plan, const GapSink& sink, StreamStart start)
{
    GapStreamSummary summary;
    summary.last_index = start.index;
    summary.last_prime = start.after;

    bool have_prev = false;
    std::uint64_t prev = 0;
    std::uint64_t prev_index = start.index;

    sieve_segments(plan, start.after + 1, [&](std::span<const std::uint64_t> seg) {
        for (const std::uint64_t p : seg) {
            if (have_prev) {
                ++summary.records;
                if (!sink(PrimeGap{prev_index, prev, p - prev})) {
                    summary.completed = false;
                    summary.last_index = prev_index;
                    summary.last_prime = prev;
                    return false;
                }
            }
            prev = p;
            ++prev_index;
            have_prev = true;
        }
        return true;
    });

    if (summary.completed && have_prev) {
        summary.last_index = prev_index;
        summary.last_prime = prev;
    }
    return summary;
}

GapStreamSummary write_gap_csv(const SievePlan& plan, std::ostream& out)
{
    out << "n,p,g\n";
    CsvRow row;
    return gap_stream(plan, [&](const PrimeGap& r) {
        row.clear();
        row << r.n << r.p << r.g;
        out << row.str() << '\n';
        return true;
    });
}

PrimeTable::PrimeTable(const SievePlan& plan) : limit_(plan.limit), primes_(primes_up_to(plan)) {}

PrimeTable::PrimeTable(std::uint64_t limit)
    : limit_(limit), primes_(primes_up_to(limit))
{
}

std::uint64_t PrimeTable::pi(std::uint64_t x) const
{
    if (x > limit_)
        throw std::out_of_range("pi(" + std::to_string(x) + "): beyond the sieved limit " +
                                std::to_string(limit_));
    return static_cast<std::uint64_t>(std::upper_bound(primes_.begin(), primes_.end(), x) -
                                      primes_.begin());
}

std::uint64_t PrimeTable::nth(std::uint64_t n) const
{
    if (n < 1 || n > primes_.size())
        throw std::out_of_range("nth(" + std::to_string(n) + "): table holds " +
                                std::to_string(primes_.size()) + " primes up to " +
                                std::to_string(limit_) + "; use a larger limit");
    return primes_[n - 1];
}

} // namespace primegap
