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

#pragma once

#include <cmath>

namespace primegap {

/// Neumaier-compensated running sum.
///
/// The pair (sum, compensation) is the full state; restoring both reproduces
/// later results bit for bit, which is what checkpoints rely on.
class CompensatedSum
{
public:
    CompensatedSum() = default;
    CompensatedSum(double sum, double compensation) : sum_(sum), comp_(compensation) {}

    void add(double v)
    {
        const double t = sum_ + v;
        if (std::fabs(sum_) >= std::fabs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }

    CompensatedSum& operator+=(double v)
    {
        add(v);
        return *this;
    }

    double value() const { return sum_ + comp_; }
    double sum() const { return sum_; }
    double compensation() const { return comp_; }

    /// Difference of two running sums, keeping the low-order parts apart so the
    /// result is accurate even when both sums are large.
    friend double difference(const CompensatedSum& a, const CompensatedSum& b)
    {
        return (a.sum_ - b.sum_) + (a.comp_ - b.comp_);
    }

    bool operator==(const CompensatedSum&) const = default;

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace primegap
