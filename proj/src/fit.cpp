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

#include "primegap/fit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "primegap/analytic.hpp"
#include "primegap/compensated.hpp"

namespace primegap {

std::vector<BinnedPoint> bin_average_k(std::span<const FluctuationSample> samples,
                                       std::size_t bin_count)
{
    if (bin_count < 1)
        throw std::invalid_argument("bin_average_k: bin_count must be >= 1");
    if (samples.empty())
        throw InsufficientDataError("bin_average_k: no samples, every bin is empty");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (samples[i].x < 16)
            throw std::domain_error("bin_average_k: samples need x >= 16");
        if (i > 0 && samples[i].x < samples[i - 1].x)
            throw std::invalid_argument("bin_average_k: samples must be ascending in x");
    }

    const double lo = std::log(static_cast<double>(samples.front().x));
    const double hi = std::log(static_cast<double>(samples.back().x));
    const double width = (hi - lo) / static_cast<double>(bin_count);

    std::vector<CompensatedSum> sums(bin_count);
    std::vector<std::size_t> counts(bin_count, 0);
    for (const auto& s : samples) {
        std::size_t bin = 0;
        if (width > 0.0) {
            const double pos = (std::log(static_cast<double>(s.x)) - lo) / width;
            bin = std::min(bin_count - 1, static_cast<std::size_t>(std::max(0.0, pos)));
        }
        sums[bin] += s.k;
        ++counts[bin];
    }

    std::vector<BinnedPoint> out;
    for (std::size_t i = 0; i < bin_count; ++i) {
        if (counts[i] == 0)
            continue;
        const double mid = width > 0.0 ? lo + (static_cast<double>(i) + 0.5) * width : lo;
        out.push_back({mid, sums[i].value() / static_cast<double>(counts[i]), counts[i]});
    }
    return out;
}

namespace {

struct Line
{
    double intercept;
    double slope;
};

Line least_squares(std::span<const BinnedPoint> pts)
{
    const auto n = static_cast<double>(pts.size());
    CompensatedSum su, sy;
    for (const auto& p : pts) {
        su += std::log(std::log(p.log_x));
        sy += p.mean_k;
    }
    const double ubar = su.value() / n;
    const double ybar = sy.value() / n;
    CompensatedSum suu, suy;
    for (const auto& p : pts) {
        const double du = std::log(std::log(p.log_x)) - ubar;
        suu += du * du;
        suy += du * (p.mean_k - ybar);
    }
    if (!(suu.value() > 0.0))
        throw SingularFitError("fit_skewes: all abscissae coincide");
    const double slope = suy.value() / suu.value();
    return {ybar - slope * ubar, slope};
}

} // namespace

FitResult fit_skewes(std::span<const BinnedPoint> binned)
{
    if (binned.size() < 3)
        throw InsufficientDataError("fit_skewes: need at least 3 binned points");
    for (const auto& p : binned)
        if (!(p.log_x > std::numbers::e))
            throw std::domain_error("fit_skewes: every point needs x > e^e");

    const Line line = least_squares(binned);
    if (line.slope == 0.0)
        throw SingularFitError("fit_skewes: zero slope, alpha undefined");

    FitResult r;
    r.A = line.slope;
    r.alpha = -line.intercept / line.slope;
    r.log10_sk1 = skewes_log10(r.alpha);
    CompensatedSum ss;
    for (const auto& p : binned) {
        const double model = line.intercept + line.slope * std::log(std::log(p.log_x));
        ss += (p.mean_k - model) * (p.mean_k - model);
    }
    r.rms_residual = std::sqrt(ss.value() / static_cast<double>(binned.size()));
    r.bin_count = binned.size();
    r.x_min = std::exp(binned.front().log_x);
    r.x_max = std::exp(binned.back().log_x);
    if (binned.size() >= 4) {
        const Line shorter = least_squares(binned.first(binned.size() - 1));
        if (shorter.slope != 0.0)
            r.alpha_shift_drop_last = r.alpha - (-shorter.intercept / shorter.slope);
    }
    return r;
}

} // namespace primegap
