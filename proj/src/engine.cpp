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

#include "primegap/engine.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <json.hpp>

namespace primegap {

using nlohmann::json;

namespace {

constexpr int kCheckpointVersion = 1;

json sum_to_json(const CompensatedSum& s) { return json::array({s.sum(), s.compensation()}); }

CompensatedSum sum_from_json(const json& j)
{
    return CompensatedSum(j.at(0).get<double>(), j.at(1).get<double>());
}

// JSON has no infinities; encode them as strings.
json real(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    return v;
}

double real_from(const json& j)
{
    if (j.is_string())
        return j.get<std::string>() == "inf" ? std::numeric_limits<double>::infinity()
                                              : -std::numeric_limits<double>::infinity();
    return j.get<double>();
}

json options_to_json(const EngineOptions& o)
{
    return {{"limit", o.limit},
            {"scans", o.scans},
            {"c", o.constants.c},
            {"B", o.constants.B},
            {"K_rh", o.constants.K_rh},
            {"K_all", o.constants.K_all},
            {"granville_c", o.constants.granville_c},
            {"third_coefficient", o.constants.third_coefficient},
            {"fit_stride", o.fit.stride},
            {"fit_x_min", real(o.fit.x_min)},
            {"fit_x_max", real(o.fit.x_max)},
            {"fit_min_log_step", o.fit.min_log_step}};
}

EngineOptions options_from_json(const json& j)
{
    EngineOptions o;
    o.limit = j.at("limit").get<std::uint64_t>();
    o.scans = j.at("scans").get<unsigned>();
    o.constants.c = j.at("c").get<double>();
    o.constants.B = j.at("B").get<double>();
    o.constants.K_rh = j.at("K_rh").get<double>();
    o.constants.K_all = j.at("K_all").get<double>();
    o.constants.granville_c = j.at("granville_c").get<double>();
    o.constants.third_coefficient = j.at("third_coefficient").get<double>();
    o.fit.stride = j.at("fit_stride").get<std::uint64_t>();
    o.fit.x_min = real_from(j.at("fit_x_min"));
    o.fit.x_max = real_from(j.at("fit_x_max"));
    o.fit.min_log_step = j.at("fit_min_log_step").get<double>();
    return o;
}

json sample_to_json(const FluctuationSample& s)
{
    return json::array({s.x, s.pi, s.li, s.f, s.fhat, s.b, s.k});
}

FluctuationSample sample_from_json(const json& j)
{
    return {j.at(0).get<std::uint64_t>(), j.at(1).get<std::uint64_t>(), j.at(2).get<double>(),
            j.at(3).get<double>(), j.at(4).get<double>(), j.at(5).get<double>(),
            j.at(6).get<double>()};
}

} // namespace

double li_spot_check(std::uint64_t limit, std::size_t count)
{
    if (limit < 3)
        return 0.0;
    std::mt19937_64 rng(0x5eed5eedULL ^ limit);
    const double span = std::log(static_cast<double>(limit) / 2.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const double x = std::min(2.0 * std::exp(span * u), static_cast<double>(limit));
        const double ref = li_quadrature(x);
        if (ref == 0.0)
            continue;
        worst = std::max(worst, std::fabs(li(x) - ref) / std::fabs(ref));
    }
    return worst;
}

ScanEngine::ScanEngine(EngineOptions options) : options_(options)
{
    options_.constants.validate();
    if (options_.limit < 2)
        throw std::invalid_argument("scan engine: limit must be >= 2");
    if (options_.fit.stride < 1)
        throw std::invalid_argument("scan engine: fit stride must be >= 1");
}

double ScanEngine::li_at(std::uint64_t x)
{
    for (const auto& m : li_memo_)
        if (m.x == x)
            return m.value;
    const double v = li(static_cast<double>(x));
    li_memo_[li_memo_next_] = {x, v};
    li_memo_next_ ^= 1;
    return v;
}

void ScanEngine::grid_point(std::uint64_t x, std::uint64_t pi, bool prime)
{
    const bool need_li = on(scans::schoenfeld) || on(scans::bbound) || on(scans::fit);
    const bool need_dusart = on(scans::dusart) && x >= kDusartLowerFrom;
    if (!need_li && !need_dusart)
        return;

    const double xd = static_cast<double>(x);
    const double pid = static_cast<double>(pi);

    if (need_li) {
        const FluctuationSample s =
            make_fluctuation(x, pi, li_at(x), options_.constants.third_coefficient);

        if (on(scans::schoenfeld)) {
            auto& st = schoenfeld_;
            const double ratio = std::fabs(s.k); // |f| / (sqrt(x) log x)
            if (ratio > st.max_all) {
                st.max_all = ratio;
                st.max_all_at = x;
            }
            if (x > kSchoenfeldFrom) {
                if (ratio > st.max_rh) {
                    st.max_rh = ratio;
                    st.max_rh_at = x;
                }
                if (ratio > options_.constants.K_rh)
                    st.violations.push_back(x);
            }
            if (x >= 10000 && ratio > st.max_1e4) {
                st.max_1e4 = ratio;
                st.max_1e4_at = x;
            }
            if (ratio > options_.constants.K_all)
                st.x_star_all = 0;
            else if (st.x_star_all == 0)
                st.x_star_all = x;
            if (ratio > options_.constants.K_rh)
                st.x_star_rh = 0;
            else if (st.x_star_rh == 0)
                st.x_star_rh = x;
        }

        if (on(scans::bbound)) {
            auto& st = bbound_;
            const double ab = std::fabs(s.b);
            if (ab > st.max_abs_b) {
                st.max_abs_b = ab;
                st.max_at = x;
            }
            if (!(ab < options_.constants.B))
                st.violations.push_back(x);
        }

        if (on(scans::fit) && prime && pi % options_.fit.stride == 0 &&
            xd >= options_.fit.x_min && xd <= options_.fit.x_max) {
            const double lx = std::log(xd);
            if (lx - fit_.last_log_x >= options_.fit.min_log_step) {
                fit_.samples.push_back(s);
                fit_.last_log_x = lx;
            }
        }
    }

    if (need_dusart) {
        auto& st = dusart_;
        const DusartBounds db = dusart_bounds(xd);
        bool bad = !(pid > db.lower);
        const double lo_ratio = pid / db.lower;
        if (lo_ratio < st.min_pi_over_lower) {
            st.min_pi_over_lower = lo_ratio;
            st.min_pi_over_lower_at = x;
        }
        if (x >= kDusartUpperFrom) {
            bad = bad || !(pid < db.upper);
            const double up_ratio = pid / db.upper;
            if (up_ratio > st.max_pi_over_upper) {
                st.max_pi_over_upper = up_ratio;
                st.max_pi_over_upper_at = x;
            }
        }
        if (bad)
            dusart_.violations.push_back(x);
    }
}

void ScanEngine::consume(const PrimeGap& r)
{
    if (finished_)
        throw std::logic_error("scan engine: consume after finish");
    if (r.n != last_index_ + 1)
        throw std::logic_error("scan engine: records must arrive in index order");
    if (r.p + r.g > options_.limit)
        throw std::logic_error("scan engine: record beyond the configured limit");

    const double c = options_.constants.c;
    const double pd = static_cast<double>(r.p);
    const double L = std::log(pd);
    const double L2 = L * L;
    const double g = static_cast<double>(r.g);
    const double term = L2 - g / c; // Delta increment; <= 0 is a violation of g < c log^2 p

    last_prime_ = r.p;
    last_index_ = r.n;

    if (on(scans::partial))
        partial_.consume(r);

    if (on(scans::cg)) {
        const double ratio = g / L2;
        if (!(term > 0.0))
            cg_.violations.push_back(r.n);
        if (ratio > cg_.max_ratio_all)
            cg_.max_ratio_all = ratio;
        if (r.n >= 5 && ratio > cg_.max_ratio) {
            cg_.max_ratio = ratio;
            cg_.max_at_n = r.n;
            cg_.max_at_p = r.p;
        }
    }

    if (on(scans::delta)) {
        auto& st = delta_;
        if (r.n == 1 && on_delta)
            on_delta(DeltaSample{1, 2, 0.0, 0.0, -2.0 * std::numbers::ln2 + 2.0 * (c + 1.0) / c});
        const CompensatedSum before = st.delta;
        st.delta += term;
        st.max_telescoping_error =
            std::max(st.max_telescoping_error, std::fabs(difference(st.delta, before) - term));
        if (!(term > 0.0))
            st.violations.push_back(r.n);
        if (r.n >= 5 && g / (c * L2) > st.max_ratio) {
            st.max_ratio = g / (c * L2);
            st.max_at_p = r.p;
        }
        if (on_delta) {
            const std::uint64_t q = r.p + r.g;
            const double qd = static_cast<double>(q);
            const double d = st.delta.value();
            on_delta(DeltaSample{r.n + 1, q, st.delta.sum(), st.delta.compensation(),
                                 d - qd * std::log(qd) + (c + 1.0) / c * qd});
        }
    }

    // Grid points p - 1 and p.
    if (r.p >= 3)
        grid_point(r.p - 1, r.n - 1, false);
    grid_point(r.p, r.n, true);

    if (on(scans::deriv)) {
        const std::uint64_t q = r.p + r.g;
        const double third = options_.constants.third_coefficient;
        const double li_p = li_at(r.p);
        const double li_q = li_at(q);
        const FluctuationSample here = make_fluctuation(r.p, r.n, li_p, third);
        const FluctuationSample next = make_fluctuation(q, r.n + 1, li_q, third);
        DerivRecord rec;
        rec.n = r.n;
        rec.p = r.p;
        rec.b_prime = (next.b - here.b) / g;
        rec.k_prime = (next.k - here.k) / g;
        rec.rhs19 = condition19_rhs(pd, c);
        rec.rhs24 = condition24_rhs(pd, c);
        rec.ok19 = rec.b_prime > rec.rhs19;
        rec.ok24 = rec.k_prime > rec.rhs24;

        auto& st = deriv_;
        ++st.records;
        if (!rec.ok19)
            st.fail19.push_back(rec.n);
        if (!rec.ok24)
            st.fail24.push_back(rec.n);
        // b'/rhs reaches 1 exactly at the boundary when rhs < 0
        if (r.p > kCondition19From && rec.rhs19 < 0.0 && rec.b_prime / rec.rhs19 > st.max_ratio19) {
            st.max_ratio19 = rec.b_prime / rec.rhs19;
            st.max_at19 = r.p;
        }
        if (r.p > kCondition24From && rec.rhs24 < 0.0 && rec.k_prime / rec.rhs24 > st.max_ratio24) {
            st.max_ratio24 = rec.k_prime / rec.rhs24;
            st.max_at24 = r.p;
        }
        if (on_deriv)
            on_deriv(rec);
    }
}

void ScanEngine::finish(std::uint64_t last_index, std::uint64_t last_prime)
{
    if (finished_)
        return;
    if (last_index != last_index_ + 1 && !(last_index == last_index_ && last_prime == last_prime_))
        throw std::logic_error("scan engine: finish does not follow the last record");
    if (last_index == last_index_ + 1) {
        last_prime_ = last_prime;
        last_index_ = last_index;
        if (last_prime >= 3)
            grid_point(last_prime - 1, last_index - 1, false);
        grid_point(last_prime, last_index, true);
    }
    if (on(scans::schoenfeld) || on(scans::bbound) || on(scans::fit))
        li_check_max_error_ = li_spot_check(options_.limit);
    finished_ = true;
}

GapStreamSummary ScanEngine::run(const SievePlan& plan, std::uint64_t stop_after)
{
    if (finished_)
        return {0, last_index_, last_prime_, true};
    SievePlan p = plan;
    p.limit = options_.limit;
    const GapStreamSummary summary = gap_stream(
        p,
        [&](const PrimeGap& r) {
            consume(r);
            return stop_after == 0 || r.p < stop_after;
        },
        position());
    if (summary.completed)
        finish(summary.last_index, summary.last_prime);
    return summary;
}

void ScanEngine::require_finished() const
{
    if (!finished_)
        throw std::logic_error("scan engine: report requested before the stream finished");
}

ScanReport ScanEngine::base_report(const char* name) const
{
    require_finished();
    ScanReport r;
    r.scan = name;
    r.limit = options_.limit;
    r.c = options_.constants.c;
    return r;
}

ScanReport ScanEngine::cg_report() const
{
    ScanReport r = base_report("cg");
    r.violations = cg_.violations;
    r.max_ratio = cg_.max_ratio;
    r.max_ratio_at = cg_.max_at_p;
    r.thresholds["max_ratio_all_n"] = cg_.max_ratio_all;
    r.thresholds["max_ratio_at_n"] = static_cast<double>(cg_.max_at_n);
    r.thresholds["stable_from_n"] =
        static_cast<double>(cg_.violations.empty() ? 1 : cg_.violations.back() + 1);
    r.passed = cg_.violations.empty();
    return r;
}

ScanReport ScanEngine::delta_report() const
{
    ScanReport r = base_report("delta");
    r.violations = delta_.violations;
    r.max_ratio = delta_.max_ratio;
    r.max_ratio_at = delta_.max_at_p;
    r.thresholds["max_telescoping_error"] = delta_.max_telescoping_error;
    r.thresholds["final_delta"] = delta_.delta.value();
    r.thresholds["monotone_from_n"] =
        static_cast<double>(delta_.violations.empty() ? 1 : delta_.violations.back() + 1);
    r.passed = delta_.violations.empty();
    return r;
}

namespace {

std::vector<std::uint64_t> failures_beyond(const std::vector<std::uint64_t>& fails,
                                           std::uint64_t min_n)
{
    std::vector<std::uint64_t> out;
    for (const auto n : fails)
        if (n >= min_n)
            out.push_back(n);
    return out;
}

// n of the expected-from prime: 5 = p_3, 3 = p_2
std::uint64_t index_of_small_prime(std::uint64_t p)
{
    switch (p) {
    case 2: return 1;
    case 3: return 2;
    case 5: return 3;
    case 7: return 4;
    default: return 0;
    }
}

} // namespace

ScanReport ScanEngine::condition19_report() const
{
    ScanReport r = base_report("b");
    r.violations = failures_beyond(deriv_.fail19, index_of_small_prime(kCondition19From) + 1);
    r.max_ratio = std::isfinite(deriv_.max_ratio19) ? deriv_.max_ratio19 : 0.0;
    r.max_ratio_at = deriv_.max_at19;
    r.thresholds["records"] = static_cast<double>(deriv_.records);
    r.thresholds["failures_all"] = static_cast<double>(deriv_.fail19.size());
    r.thresholds["checked_from_p"] = static_cast<double>(kCondition19From);
    r.thresholds["holds_from_n"] =
        static_cast<double>(deriv_.fail19.empty() ? 1 : deriv_.fail19.back() + 1);
    r.passed = r.violations.empty();
    return r;
}

ScanReport ScanEngine::condition24_report() const
{
    ScanReport r = base_report("k");
    r.violations = failures_beyond(deriv_.fail24, index_of_small_prime(kCondition24From) + 1);
    r.max_ratio = std::isfinite(deriv_.max_ratio24) ? deriv_.max_ratio24 : 0.0;
    r.max_ratio_at = deriv_.max_at24;
    r.thresholds["records"] = static_cast<double>(deriv_.records);
    r.thresholds["failures_all"] = static_cast<double>(deriv_.fail24.size());
    r.thresholds["checked_from_p"] = static_cast<double>(kCondition24From);
    r.thresholds["holds_from_n"] =
        static_cast<double>(deriv_.fail24.empty() ? 1 : deriv_.fail24.back() + 1);
    r.passed = r.violations.empty();
    return r;
}

ScanReport ScanEngine::schoenfeld_report() const
{
    ScanReport r = base_report("schoenfeld");
    const auto& st = schoenfeld_;
    r.violations = st.violations;
    r.max_ratio = st.max_rh;
    r.max_ratio_at = st.max_rh_at;
    r.thresholds["K_rh"] = options_.constants.K_rh;
    r.thresholds["K_all"] = options_.constants.K_all;
    r.thresholds["max_ratio_all_x"] = st.max_all;
    r.thresholds["max_ratio_all_x_at"] = static_cast<double>(st.max_all_at);
    r.thresholds["max_ratio_from_1e4"] = st.max_1e4;
    r.thresholds["max_ratio_from_1e4_at"] = static_cast<double>(st.max_1e4_at);
    r.thresholds["x_star_K_all"] = static_cast<double>(st.x_star_all);
    r.thresholds["x_star_K_rh"] = static_cast<double>(st.x_star_rh);
    r.passed = st.violations.empty();
    return r;
}

ScanReport ScanEngine::bbound_report() const
{
    ScanReport r = base_report("bbound");
    r.violations = bbound_.violations;
    r.max_ratio = bbound_.max_abs_b;
    r.max_ratio_at = bbound_.max_at;
    r.thresholds["B"] = options_.constants.B;
    r.passed = bbound_.violations.empty();
    return r;
}

ScanReport ScanEngine::dusart_report() const
{
    ScanReport r = base_report("dusart");
    const auto& st = dusart_;
    r.violations = st.violations;
    r.max_ratio = st.max_pi_over_upper;
    r.max_ratio_at = st.max_pi_over_upper_at;
    r.thresholds["min_pi_over_lower"] = std::isfinite(st.min_pi_over_lower) ? st.min_pi_over_lower : 0.0;
    r.thresholds["min_pi_over_lower_at"] = static_cast<double>(st.min_pi_over_lower_at);
    r.thresholds["lower_from"] = static_cast<double>(kDusartLowerFrom);
    r.thresholds["upper_from"] = static_cast<double>(kDusartUpperFrom);
    r.passed = st.violations.empty();
    return r;
}

std::string ScanEngine::checkpoint_json() const
{
    json j;
    j["version"] = kCheckpointVersion;
    j["last_index"] = last_index_;
    j["last_prime"] = last_prime_;
    j["finished"] = finished_;
    j["li_check_max_error"] = li_check_max_error_;
    j["options"] = options_to_json(options_);
    j["accumulators"] = {{"logsq", sum_to_json(partial_.logsq)},
                         {"delta", sum_to_json(delta_.delta)}};

    json s;
    s["partial"] = {{"N", partial_.N},
                    {"gap_sum", partial_.gap_sum},
                    {"last_failure", partial_.last_failure},
                    {"identity_ok", partial_.identity_ok}};
    s["cg"] = {{"violations", cg_.violations},     {"max_ratio", cg_.max_ratio},
               {"max_at_n", cg_.max_at_n},         {"max_at_p", cg_.max_at_p},
               {"max_ratio_all", cg_.max_ratio_all}};
    s["delta"] = {{"violations", delta_.violations},
                  {"max_telescoping_error", delta_.max_telescoping_error},
                  {"max_ratio", delta_.max_ratio},
                  {"max_at_p", delta_.max_at_p}};
    s["deriv"] = {{"records", deriv_.records},
                  {"fail19", deriv_.fail19},
                  {"fail24", deriv_.fail24},
                  {"max_ratio19", real(deriv_.max_ratio19)},
                  {"max_at19", deriv_.max_at19},
                  {"max_ratio24", real(deriv_.max_ratio24)},
                  {"max_at24", deriv_.max_at24}};
    const auto& sc = schoenfeld_;
    s["schoenfeld"] = {{"max_all", sc.max_all},       {"max_all_at", sc.max_all_at},
                       {"max_rh", sc.max_rh},         {"max_rh_at", sc.max_rh_at},
                       {"max_1e4", sc.max_1e4},       {"max_1e4_at", sc.max_1e4_at},
                       {"violations", sc.violations}, {"x_star_all", sc.x_star_all},
                       {"x_star_rh", sc.x_star_rh}};
    s["bbound"] = {{"max_abs_b", bbound_.max_abs_b},
                   {"max_at", bbound_.max_at},
                   {"violations", bbound_.violations}};
    s["dusart"] = {{"violations", dusart_.violations},
                   {"max_pi_over_upper", dusart_.max_pi_over_upper},
                   {"max_pi_over_upper_at", dusart_.max_pi_over_upper_at},
                   {"min_pi_over_lower", real(dusart_.min_pi_over_lower)},
                   {"min_pi_over_lower_at", dusart_.min_pi_over_lower_at}};
    json samples = json::array();
    for (const auto& smp : fit_.samples)
        samples.push_back(sample_to_json(smp));
    s["fit"] = {{"samples", samples}, {"last_log_x", real(fit_.last_log_x)}};
    j["state"] = s;
    return j.dump();
}

ScanEngine ScanEngine::from_checkpoint_json(const std::string& text)
{
    const json j = json::parse(text);
    if (j.at("version").get<int>() != kCheckpointVersion)
        throw std::invalid_argument("checkpoint: unsupported version");
    ScanEngine e(options_from_json(j.at("options")));
    e.last_index_ = j.at("last_index").get<std::uint64_t>();
    e.last_prime_ = j.at("last_prime").get<std::uint64_t>();
    e.finished_ = j.at("finished").get<bool>();
    e.li_check_max_error_ = j.at("li_check_max_error").get<double>();
    e.partial_.logsq = sum_from_json(j.at("accumulators").at("logsq"));
    e.delta_.delta = sum_from_json(j.at("accumulators").at("delta"));

    const json& s = j.at("state");
    const json& pt = s.at("partial");
    e.partial_.N = pt.at("N").get<std::uint64_t>();
    e.partial_.gap_sum = pt.at("gap_sum").get<std::uint64_t>();
    e.partial_.last_failure = pt.at("last_failure").get<std::uint64_t>();
    e.partial_.identity_ok = pt.at("identity_ok").get<bool>();

    const json& cg = s.at("cg");
    e.cg_.violations = cg.at("violations").get<std::vector<std::uint64_t>>();
    e.cg_.max_ratio = cg.at("max_ratio").get<double>();
    e.cg_.max_at_n = cg.at("max_at_n").get<std::uint64_t>();
    e.cg_.max_at_p = cg.at("max_at_p").get<std::uint64_t>();
    e.cg_.max_ratio_all = cg.at("max_ratio_all").get<double>();

    const json& dl = s.at("delta");
    e.delta_.violations = dl.at("violations").get<std::vector<std::uint64_t>>();
    e.delta_.max_telescoping_error = dl.at("max_telescoping_error").get<double>();
    e.delta_.max_ratio = dl.at("max_ratio").get<double>();
    e.delta_.max_at_p = dl.at("max_at_p").get<std::uint64_t>();

    const json& dv = s.at("deriv");
    e.deriv_.records = dv.at("records").get<std::uint64_t>();
    e.deriv_.fail19 = dv.at("fail19").get<std::vector<std::uint64_t>>();
    e.deriv_.fail24 = dv.at("fail24").get<std::vector<std::uint64_t>>();
    e.deriv_.max_ratio19 = real_from(dv.at("max_ratio19"));
    e.deriv_.max_at19 = dv.at("max_at19").get<std::uint64_t>();
    e.deriv_.max_ratio24 = real_from(dv.at("max_ratio24"));
    e.deriv_.max_at24 = dv.at("max_at24").get<std::uint64_t>();

    const json& sc = s.at("schoenfeld");
    auto& st = e.schoenfeld_;
    st.max_all = sc.at("max_all").get<double>();
    st.max_all_at = sc.at("max_all_at").get<std::uint64_t>();
    st.max_rh = sc.at("max_rh").get<double>();
    st.max_rh_at = sc.at("max_rh_at").get<std::uint64_t>();
    st.max_1e4 = sc.at("max_1e4").get<double>();
    st.max_1e4_at = sc.at("max_1e4_at").get<std::uint64_t>();
    st.violations = sc.at("violations").get<std::vector<std::uint64_t>>();
    st.x_star_all = sc.at("x_star_all").get<std::uint64_t>();
    st.x_star_rh = sc.at("x_star_rh").get<std::uint64_t>();

    const json& bb = s.at("bbound");
    e.bbound_.max_abs_b = bb.at("max_abs_b").get<double>();
    e.bbound_.max_at = bb.at("max_at").get<std::uint64_t>();
    e.bbound_.violations = bb.at("violations").get<std::vector<std::uint64_t>>();

    const json& du = s.at("dusart");
    e.dusart_.violations = du.at("violations").get<std::vector<std::uint64_t>>();
    e.dusart_.max_pi_over_upper = du.at("max_pi_over_upper").get<double>();
    e.dusart_.max_pi_over_upper_at = du.at("max_pi_over_upper_at").get<std::uint64_t>();
    e.dusart_.min_pi_over_lower = real_from(du.at("min_pi_over_lower"));
    e.dusart_.min_pi_over_lower_at = du.at("min_pi_over_lower_at").get<std::uint64_t>();

    const json& ft = s.at("fit");
    for (const auto& smp : ft.at("samples"))
        e.fit_.samples.push_back(sample_from_json(smp));
    e.fit_.last_log_x = real_from(ft.at("last_log_x"));
    return e;
}

} // namespace primegap
