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

/// @file fit.hpp
/// @brief Fit of k(x) ~ -A (alpha - log log log x) and the implied Skewes estimate.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "primegap/fluct.hpp"

namespace primegap {

class InsufficientDataError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class SingularFitError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct BinnedPoint
{
    double log_x = 0.0;  ///< bin midpoint in log x
    double mean_k = 0.0;
    std::size_t count = 0;
};

struct FitResult
{
    double A = 0.0;
    double alpha = 0.0;
    double log10_sk1 = 0.0;
    double rms_residual = 0.0;
    std::size_t bin_count = 0;
    double x_min = 0.0;
    double x_max = 0.0;
    /// alpha(all bins) - alpha(without the largest-x bin); needs >= 4 bins.
    std::optional<double> alpha_shift_drop_last;
};

/// Equal-width bins in log x over the sample range; each keeps the plain mean
/// of k. Empty bins are dropped. Samples must be ascending with x >= 16.
std::vector<BinnedPoint> bin_average_k(std::span<const FluctuationSample> samples,
                                       std::size_t bin_count);

/// Least-squares fit of mean_k = -A alpha + A u, u = log log log x, with every
/// bin weighted equally.
FitResult fit_skewes(std::span<const BinnedPoint> binned);

} // namespace primegap
