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

/// @file engine.hpp
/// @brief Single-pass scan engine over the gap stream.
///
/// The engine owns one accumulator per enabled scan and feeds all of them from
/// the same ordered stream of PrimeGap records. Its whole state serializes to
/// a JSON checkpoint; a restored engine continues bit-identically.
#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "primegap/analytic.hpp"
#include "primegap/compensated.hpp"
#include "primegap/fluct.hpp"
#include "primegap/selberg.hpp"
#include "primegap/sieve.hpp"

namespace primegap {

namespace scans {
inline constexpr unsigned partial = 1u << 0;
inline constexpr unsigned cg = 1u << 1;
inline constexpr unsigned delta = 1u << 2;
inline constexpr unsigned deriv = 1u << 3;
inline constexpr unsigned schoenfeld = 1u << 4;
inline constexpr unsigned bbound = 1u << 5;
inline constexpr unsigned dusart = 1u << 6;
inline constexpr unsigned fit = 1u << 7;
inline constexpr unsigned all = (1u << 8) - 1;
} // namespace scans

/// Which k samples feed the Skewes fit.
struct FitSampling
{
    std::uint64_t stride = 1000;  ///< every stride-th prime
    double x_min = 1e4;
    double x_max = std::numeric_limits<double>::infinity();
    double min_log_step = 1e-3;   ///< log thinning: skip samples closer than this in log x
};

struct EngineOptions
{
    std::uint64_t limit = 2;
    unsigned scans = scans::all;
    Constants constants;
    FitSampling fit;
};

class ScanEngine
{
public:
    explicit ScanEngine(EngineOptions options);

    const EngineOptions& options() const { return options_; }

    /// Feed the next record; indices must be consecutive.
    void consume(const PrimeGap& r);
    /// Close the stream at the largest prime <= limit.
    void finish(std::uint64_t last_index, std::uint64_t last_prime);
    bool finished() const { return finished_; }

    /// Resume point for gap_stream.
    StreamStart position() const { return {last_index_, last_prime_}; }

    /// Stream from position() to options().limit. With stop_after > 0 the run
    /// halts after the first record whose prime is >= stop_after and the
    /// engine stays open for checkpointing.
    GapStreamSummary run(const SievePlan& plan, std::uint64_t stop_after = 0);

    // Per-record hooks (not part of the checkpointed state).
    std::function<void(const DerivRecord&)> on_deriv;
    std::function<void(const DeltaSample&)> on_delta;

    std::string checkpoint_json() const;
    static ScanEngine from_checkpoint_json(const std::string& text);

    // Reports; valid once finished().
    ScanReport cg_report() const;
    ScanReport delta_report() const;
    ScanReport condition19_report() const;
    ScanReport condition24_report() const;
    ScanReport schoenfeld_report() const;
    ScanReport bbound_report() const;
    ScanReport dusart_report() const;

    const PartialSumState& partial_sums() const { return partial_; }
    double max_telescoping_error() const { return delta_.max_telescoping_error; }
    const std::vector<FluctuationSample>& fit_samples() const { return fit_.samples; }
    /// Worst relative error of li() against quadrature over the spot checks.
    double li_check_max_error() const { return li_check_max_error_; }

private:
    struct CgState
    {
        std::vector<std::uint64_t> violations;
        double max_ratio = 0.0; // n >= 5
        std::uint64_t max_at_n = 0;
        std::uint64_t max_at_p = 0;
        double max_ratio_all = 0.0;
    };
    struct DeltaState
    {
        CompensatedSum delta;
        std::vector<std::uint64_t> violations;
        double max_telescoping_error = 0.0;
        double max_ratio = 0.0; // (g/c) / log^2 p for n >= 5
        std::uint64_t max_at_p = 0;
    };
    struct DerivState
    {
        std::uint64_t records = 0;
        std::vector<std::uint64_t> fail19; // every n with ok19 == false
        std::vector<std::uint64_t> fail24;
        double max_ratio19 = -std::numeric_limits<double>::infinity();
        std::uint64_t max_at19 = 0;
        double max_ratio24 = -std::numeric_limits<double>::infinity();
        std::uint64_t max_at24 = 0;
    };
    struct SchoenfeldState
    {
        double max_all = 0.0;
        std::uint64_t max_all_at = 0;
        double max_rh = 0.0; // x > 2657
        std::uint64_t max_rh_at = 0;
        double max_1e4 = 0.0; // x >= 10^4
        std::uint64_t max_1e4_at = 0;
        std::vector<std::uint64_t> violations; // x > 2657 with ratio > K_rh
        std::uint64_t x_star_all = 0;  // 0 while pending
        std::uint64_t x_star_rh = 0;
    };
    struct BBoundState
    {
        double max_abs_b = 0.0;
        std::uint64_t max_at = 0;
        std::vector<std::uint64_t> violations;
    };
    struct DusartState
    {
        std::vector<std::uint64_t> violations;
        double max_pi_over_upper = 0.0;
        std::uint64_t max_pi_over_upper_at = 0;
        double min_pi_over_lower = std::numeric_limits<double>::infinity();
        std::uint64_t min_pi_over_lower_at = 0;
    };
    struct FitState
    {
        std::vector<FluctuationSample> samples;
        double last_log_x = -std::numeric_limits<double>::infinity();
    };

    bool on(unsigned scan) const { return (options_.scans & scan) != 0; }
    double li_at(std::uint64_t x);
    void grid_point(std::uint64_t x, std::uint64_t pi, bool prime);
    ScanReport base_report(const char* name) const;
    void require_finished() const;

    EngineOptions options_;
    std::uint64_t last_index_ = 0;
    std::uint64_t last_prime_ = 0;
    bool finished_ = false;

    // two-slot memo of li(); not checkpointed since li is pure
    struct LiMemo
    {
        std::uint64_t x = 0;
        double value = 0.0;
    };
    LiMemo li_memo_[2];
    int li_memo_next_ = 0;
    double li_check_max_error_ = 0.0;

    PartialSumState partial_;
    CgState cg_;
    DeltaState delta_;
    DerivState deriv_;
    SchoenfeldState schoenfeld_;
    BBoundState bbound_;
    DusartState dusart_;
    FitState fit_;
};

/// Deterministic spot check of li() against li_quadrature() at `count` points
/// in [2, limit]; returns the largest relative error.
double li_spot_check(std::uint64_t limit, std::size_t count = 100);

} // namespace primegap
