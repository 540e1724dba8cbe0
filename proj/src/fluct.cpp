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

#include "primegap/fluct.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "primegap/engine.hpp"

namespace primegap {

FluctuationSample make_fluctuation(std::uint64_t x, std::uint64_t pi, double li_x,
                                   double third_coefficient)
{
    const double xd = static_cast<double>(x);
    const double L = std::log(xd);
    const double L2 = L * L;
    const double L3 = L2 * L;
    FluctuationSample s;
    s.x = x;
    s.pi = pi;
    s.li = li_x;
    s.f = static_cast<double>(pi) - li_x;
    s.fhat = static_cast<double>(pi) - xd / L - xd / L2 - third_coefficient * xd / L3;
    s.b = s.fhat * L3 / xd;
    s.k = s.f / (std::sqrt(xd) * L);
    return s;
}

FluctuationSample fluctuation_at(std::uint64_t x, const PrimeTable& table, const Constants& k)
{
    if (x < 2)
        throw std::domain_error("fluctuation_at: x must be >= 2");
    return make_fluctuation(x, table.pi(x), li(static_cast<double>(x)), k.third_coefficient);
}

FluctuationSample fluctuation_at(std::uint64_t x, const Constants& k)
{
    if (x < 2)
        throw std::domain_error("fluctuation_at: x must be >= 2");
    return make_fluctuation(x, prime_count(x), li(static_cast<double>(x)), k.third_coefficient);
}

namespace {

ScanEngine run_engine(std::uint64_t limit, unsigned which, const Constants& k, const SievePlan& base,
                      const std::function<void(ScanEngine&)>& hook = {})
{
    EngineOptions opts;
    opts.limit = limit;
    opts.scans = which;
    opts.constants = k;
    ScanEngine engine(opts);
    if (hook)
        hook(engine);
    engine.run(base);
    return engine;
}

Constants with_c(double c)
{
    Constants k;
    k.c = c;
    return k;
}

void require_min(std::uint64_t limit, std::uint64_t min, const char* what)
{
    if (limit < min)
        throw std::domain_error(std::string(what) + ": limit must be >= " + std::to_string(min));
}

} // namespace

DeltaScan delta_scan(std::uint64_t limit, double c, const SievePlan& base)
{
    require_min(limit, 3, "delta_scan");
    DeltaScan out;
    const ScanEngine engine = run_engine(limit, scans::delta, with_c(c), base, [&](ScanEngine& e) {
        e.on_delta = [&](const DeltaSample& s) { out.samples.push_back(s); };
    });
    const ScanReport rep = engine.delta_report();
    out.violations = rep.violations;
    out.max_telescoping_error = engine.max_telescoping_error();
    return out;
}

ScanReport cg_scan(std::uint64_t limit, double c, const SievePlan& base)
{
    require_min(limit, 3, "cg_scan");
    return run_engine(limit, scans::cg, with_c(c), base).cg_report();
}

std::vector<DerivRecord> bprime_records(std::uint64_t limit, double c, const SievePlan& base)
{
    require_min(limit, 7, "bprime_records");
    std::vector<DerivRecord> out;
    run_engine(limit, scans::deriv, with_c(c), base, [&](ScanEngine& e) {
        e.on_deriv = [&](const DerivRecord& r) { out.push_back(r); };
    });
    return out;
}

std::vector<DerivRecord> kprime_records(std::uint64_t limit, double c, const SievePlan& base)
{
    require_min(limit, 5, "kprime_records");
    std::vector<DerivRecord> out;
    run_engine(limit, scans::deriv, with_c(c), base, [&](ScanEngine& e) {
        e.on_deriv = [&](const DerivRecord& r) { out.push_back(r); };
    });
    return out;
}

double interpolate_derivative(double x, std::span<const DerivRecord> records, DerivSide side)
{
    if (records.empty())
        throw std::out_of_range("interpolate_derivative: no records");
    const auto lo = static_cast<double>(records.front().p);
    const auto hi = static_cast<double>(records.back().p);
    if (!(x >= lo && x <= hi))
        throw std::out_of_range("interpolate_derivative: x outside the anchored range");
    auto value = [side](const DerivRecord& r) { return side == DerivSide::b ? r.b_prime : r.k_prime; };

    // first anchor with p > x
    auto it = std::upper_bound(records.begin(), records.end(), x,
                               [](double v, const DerivRecord& r) { return v < static_cast<double>(r.p); });
    if (it == records.end())
        return value(records.back());
    const DerivRecord& right = *it;
    const DerivRecord& left = *(it - 1);
    const double t = (x - static_cast<double>(left.p)) /
                     static_cast<double>(right.p - left.p);
    return value(left) + t * (value(right) - value(left));
}

ScanReport condition19_scan(std::uint64_t limit, double c, const SievePlan& base)
{
    require_min(limit, 7, "condition19_scan");
    return run_engine(limit, scans::deriv, with_c(c), base).condition19_report();
}

ScanReport condition24_scan(std::uint64_t limit, double c, const SievePlan& base)
{
    require_min(limit, 5, "condition24_scan");
    return run_engine(limit, scans::deriv, with_c(c), base).condition24_report();
}

ScanReport schoenfeld_scan(std::uint64_t limit, const Constants& k, const SievePlan& base)
{
    require_min(limit, 10, "schoenfeld_scan");
    return run_engine(limit, scans::schoenfeld, k, base).schoenfeld_report();
}

ScanReport bbound_scan(std::uint64_t limit, const Constants& k, const SievePlan& base)
{
    require_min(limit, 10, "bbound_scan");
    return run_engine(limit, scans::bbound, k, base).bbound_report();
}

ScanReport dusart_scan(std::uint64_t limit, const SievePlan& base)
{
    require_min(limit, kDusartUpperFrom + 1, "dusart_scan");
    return run_engine(limit, scans::dusart, Constants{}, base).dusart_report();
}

} // namespace primegap
