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

/// @file commands.hpp
/// @brief The primegap command set: selberg, scan, figure1, fit, report.
///
/// Every command returns 0 when its checks pass, 1 when a mathematical
/// violation was found (and still fully reported), 2 on usage or resource
/// errors.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "primegap/analytic.hpp"
#include "primegap/sieve.hpp"

namespace primegap {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Bad configuration or unusable paths; maps to exit code 2.
class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

struct RunConfig
{
    std::uint64_t limit = 100'000'000;
    Constants constants;
    std::uint64_t segment_size = std::uint64_t{1} << 20;
    unsigned workers = 1;
    std::string output_path = "-"; ///< "-" is stdout
    OutputFormat format = OutputFormat::csv;
    std::optional<std::string> checkpoint_path;
    bool resume = false;
    std::uint64_t stop_after = 0;       ///< halt (and checkpoint) after this prime
    std::uint64_t checkpoint_every = 0; ///< checkpoint spacing in x; 0 = only when halting

    // selberg
    std::size_t points = 100;
    std::uint64_t sweep_limit = 1'000'000;
    // fit
    std::size_t bins = 20;
    std::uint64_t fit_stride = 1000;
    double fit_x_min = 1e4;
    bool self_test = false;
    // scan
    std::string records_path;

    SievePlan plan() const;
};

/// Parse a count such as "1000000", "1e6" or "10^6".
std::uint64_t parse_count(std::string_view text);

int cmd_selberg(const RunConfig& cfg, std::ostream& diag);
int cmd_scan(const RunConfig& cfg, std::string_view which, std::ostream& diag);
int cmd_figure1(const RunConfig& cfg, std::ostream& diag);
int cmd_fit(const RunConfig& cfg, std::ostream& diag);
int cmd_report(const RunConfig& cfg, std::ostream& diag);

/// Parse argv and dispatch; the tool's main() is a thin wrapper around this.
int run_cli(int argc, const char* const* argv, std::ostream& diag);

/// Names accepted by `scan --which`.
const std::vector<std::string>& scan_names();

} // namespace primegap
