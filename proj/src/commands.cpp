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

#include "primegap/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "primegap/csv.hpp"
#include "primegap/engine.hpp"
#include "primegap/fit.hpp"
#include "primegap/fluct.hpp"
#include "primegap/selberg.hpp"

namespace primegap {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

// S1 - S2 quoted for x = p_{10^4}
constexpr std::uint64_t kP10000 = 104729;
constexpr double kQuotedS1MinusS2 = 686787.25;
// largest g_n / log^2 p_n on record
constexpr double kRecordGapRatio = 0.9206386;

constexpr std::uint64_t kFitMinLimit = 10000;

/// A file or stdout; opening fails loudly so the command can exit 2.
class Output
{
public:
    explicit Output(const std::string& path) : path_(path)
    {
        if (path == "-")
            return;
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
        if (!*file_)
            throw UsageError("cannot open output path '" + path + "' for writing");
    }

    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    bool is_stdout() const { return !file_; }
    const std::string& path() const { return path_; }

    void close()
    {
        if (file_) {
            file_->close();
            if (!*file_)
                throw UsageError("failed writing '" + path_ + "'");
        } else {
            std::cout.flush();
        }
    }

private:
    std::string path_;
    std::unique_ptr<std::ofstream> file_;
};

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw UsageError("cannot open '" + path + "' for writing");
    f << text;
    if (!f)
        throw UsageError("failed writing '" + path + "'");
}

std::string read_text_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw UsageError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Summary JSON goes beside a file output, or to diag when writing to stdout.
void emit_summary(const Output& out, const ordered_json& summary, std::ostream& diag)
{
    const std::string text = summary.dump(2) + "\n";
    if (out.is_stdout())
        diag << text;
    else
        write_text_file(out.path() + ".summary.json", text);
}

ordered_json to_json(const ScanReport& r)
{
    ordered_json j;
    j["scan"] = r.scan;
    j["limit"] = r.limit;
    j["c"] = r.c;
    j["violations"] = r.violations;
    j["max_ratio"] = r.max_ratio;
    j["max_ratio_at"] = r.max_ratio_at;
    ordered_json th = ordered_json::object();
    for (const auto& [k, v] : r.thresholds)
        th[k] = v;
    j["thresholds"] = th;
    j["passed"] = r.passed;
    return j;
}

ordered_json to_json(const FitResult& f)
{
    ordered_json j;
    j["A"] = f.A;
    j["alpha"] = f.alpha;
    j["log10_sk1"] = f.log10_sk1;
    j["rms_residual"] = f.rms_residual;
    j["bin_count"] = f.bin_count;
    j["range"] = {f.x_min, f.x_max};
    j["alpha_shift_drop_last"] =
        f.alpha_shift_drop_last ? ordered_json(*f.alpha_shift_drop_last) : ordered_json(nullptr);
    return j;
}

ordered_json to_json(const std::vector<BinnedPoint>& bins)
{
    ordered_json a = ordered_json::array();
    for (const auto& b : bins)
        a.push_back({{"log_x", b.log_x}, {"mean_k", b.mean_k}, {"count", b.count}});
    return a;
}

ordered_json config_json(const RunConfig& cfg)
{
    const Constants& k = cfg.constants;
    return {{"limit", cfg.limit}, {"c", k.c},         {"B", k.B},
            {"K_rh", k.K_rh},     {"K_all", k.K_all}, {"third_coefficient", k.third_coefficient}};
}

void require_limit(const RunConfig& cfg, std::uint64_t min, std::string_view what)
{
    if (cfg.limit < min)
        throw UsageError(std::string(what) + " needs --limit >= " + std::to_string(min));
}

// ---------------------------------------------------------------------------
// engine driving with checkpoints

bool same_options(const EngineOptions& a, const EngineOptions& b)
{
    const Constants& x = a.constants;
    const Constants& y = b.constants;
    return a.limit == b.limit && a.scans == b.scans && x.c == y.c && x.B == y.B &&
           x.K_rh == y.K_rh && x.K_all == y.K_all && x.third_coefficient == y.third_coefficient &&
           a.fit.stride == b.fit.stride && a.fit.x_min == b.fit.x_min &&
           a.fit.x_max == b.fit.x_max && a.fit.min_log_step == b.fit.min_log_step;
}

ScanEngine start_engine(const RunConfig& cfg, const EngineOptions& opts)
{
    if (!cfg.resume)
        return ScanEngine(opts);
    if (!cfg.checkpoint_path)
        throw UsageError("--resume needs --checkpoint PATH");
    ScanEngine engine = [&] {
        try {
            return ScanEngine::from_checkpoint_json(read_text_file(*cfg.checkpoint_path));
        } catch (const json::exception& e) {
            throw UsageError("checkpoint '" + *cfg.checkpoint_path + "' is unreadable: " + e.what());
        }
    }();
    if (!same_options(engine.options(), opts))
        throw UsageError("checkpoint '" + *cfg.checkpoint_path +
                         "' was written with different scan settings");
    return engine;
}

void save_checkpoint(const RunConfig& cfg, const ScanEngine& engine)
{
    const std::string tmp = *cfg.checkpoint_path + ".tmp";
    write_text_file(tmp, engine.checkpoint_json());
    std::filesystem::rename(tmp, *cfg.checkpoint_path);
}

/// Runs the engine to the limit. Returns false when the run halted at
/// --stop-after; the checkpoint has then been written.
bool drive(ScanEngine& engine, const RunConfig& cfg, std::ostream& diag)
{
    const SievePlan plan = cfg.plan();
    if ((cfg.stop_after || cfg.checkpoint_every) && !cfg.checkpoint_path)
        throw UsageError("--stop-after and --checkpoint-every need --checkpoint PATH");

    for (;;) {
        std::uint64_t mark = 0;
        if (cfg.checkpoint_every)
            mark = engine.position().after + cfg.checkpoint_every;
        if (cfg.stop_after && (mark == 0 || cfg.stop_after < mark))
            mark = cfg.stop_after;
        const GapStreamSummary s = engine.run(plan, mark);
        if (s.completed)
            return true;
        save_checkpoint(cfg, engine);
        if (cfg.stop_after && engine.position().after >= cfg.stop_after) {
            diag << "halted after prime " << engine.position().after << "; checkpoint written to "
                 << *cfg.checkpoint_path << " (rerun with --resume to continue)\n";
            return false;
        }
    }
}

EngineOptions engine_options(const RunConfig& cfg, unsigned which)
{
    EngineOptions o;
    o.limit = cfg.limit;
    o.scans = which;
    o.constants = cfg.constants;
    o.fit.stride = cfg.fit_stride;
    o.fit.x_min = cfg.fit_x_min;
    o.fit.x_max = static_cast<double>(cfg.limit);
    return o;
}

// ---------------------------------------------------------------------------

std::string plot_script(const std::string& csv_path)
{
    std::string s;
    s += "# k'(p) at primes against the condition-24 curve.\n";
    s += "# usage: python3 this_script.py [csv]\n";
    s += "import csv\nimport sys\n\nimport matplotlib\nmatplotlib.use(\"Agg\")\n";
    s += "import matplotlib.pyplot as plt\n\n";
    s += "path = sys.argv[1] if len(sys.argv) > 1 else \"" + csv_path + "\"\n";
    s += "p, kp, rhs = [], [], []\n";
    s += "with open(path) as fh:\n";
    s += "    for row in csv.DictReader(fh):\n";
    s += "        p.append(float(row[\"p\"]))\n";
    s += "        kp.append(float(row[\"k_prime\"]))\n";
    s += "        rhs.append(float(row[\"rhs24\"]))\n\n";
    s += "plt.semilogx(p, kp, \".\", ms=1, label=\"k'(p)\")\n";
    s += "plt.semilogx(p, rhs, \"-\", label=\"rhs, c=1\")\n";
    s += "plt.xlabel(\"p\")\nplt.ylabel(\"k'(p)\")\nplt.legend()\n";
    s += "plt.savefig(path + \".png\", dpi=150)\n";
    return s;
}

FitResult synthetic_fit(double A, double alpha, std::size_t bins)
{
    std::vector<FluctuationSample> samples;
    for (int i = 0; i <= 400; ++i) {
        const double lx = std::log(1e4) + (std::log(1e10) - std::log(1e4)) * i / 400.0;
        FluctuationSample s;
        s.x = static_cast<std::uint64_t>(std::exp(lx));
        s.k = -A * (alpha - std::log(std::log(std::log(static_cast<double>(s.x)))));
        samples.push_back(s);
    }
    // a single sample per bin keeps the model exact at the bin midpoints
    std::vector<BinnedPoint> pts;
    for (std::size_t i = 0; i < std::min<std::size_t>(bins, samples.size()); ++i) {
        const auto& s = samples[i * (samples.size() - 1) / std::max<std::size_t>(1, bins - 1)];
        pts.push_back({std::log(static_cast<double>(s.x)), s.k, 1});
    }
    return fit_skewes(pts);
}

} // namespace

SievePlan RunConfig::plan() const
{
    SievePlan p;
    p.limit = std::max<std::uint64_t>(limit, 2);
    p.segment_size = segment_size;
    p.worker_count = workers;
    return p;
}

std::uint64_t parse_count(std::string_view text)
{
    std::string t(text);
    t.erase(std::remove(t.begin(), t.end(), '_'), t.end());
    if (t.empty())
        throw UsageError("empty count");
    const auto caret = t.find('^');
    if (caret != std::string::npos) {
        const std::uint64_t base = parse_count(t.substr(0, caret));
        const std::uint64_t exp = parse_count(t.substr(caret + 1));
        std::uint64_t v = 1;
        for (std::uint64_t i = 0; i < exp; ++i) {
            if (v > kMaxLimit / std::max<std::uint64_t>(base, 1))
                throw UsageError("count '" + std::string(text) + "' is too large");
            v *= base;
        }
        return v;
    }
    if (std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc())
            throw UsageError("count '" + std::string(text) + "' is out of range");
        return v;
    }
    double d = 0.0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), d);
    if (ec != std::errc() || ptr != t.data() + t.size() || !(d >= 0.0) || d > 9.2e18 ||
        d != std::floor(d))
        throw UsageError("'" + std::string(text) + "' is not a non-negative integer count");
    return static_cast<std::uint64_t>(d);
}

const std::vector<std::string>& scan_names()
{
    static const std::vector<std::string> names = {"cg",         "b",      "k",     "delta",
                                                   "schoenfeld", "dusart", "bbound"};
    return names;
}

// ---------------------------------------------------------------------------

int cmd_selberg(const RunConfig& cfg, std::ostream& diag)
{
    require_limit(cfg, 4, "selberg");
    if (cfg.resume || cfg.stop_after)
        throw UsageError("selberg does not support checkpoint/resume");
    Output out(cfg.output_path);

    std::vector<std::uint64_t> xs = log_spaced_points(4, cfg.limit, cfg.points);
    if (kP10000 <= cfg.limit)
        xs.push_back(kP10000);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    SievePlan plan = cfg.plan();
    const SelbergTable table(plan);
    std::vector<SelbergSums> sums;
    sums.reserve(xs.size());
    bool all_hold = true;
    for (const auto x : xs) {
        sums.push_back(table.sums_at(x));
        all_hold = all_hold && sums.back().lemma1_holds;
    }
    const Lemma1Sweep sweep = lemma1_sweep(table, std::min(cfg.limit, std::max<std::uint64_t>(cfg.sweep_limit, 4)));
    const Theorem2Result t2 = theorem2_scan_limit(cfg.limit, false, plan);

    ordered_json summary;
    summary["command"] = "selberg";
    summary["config"] = config_json(cfg);
    summary["points"] = xs.size();
    summary["lemma1_all_points"] = all_hold;
    summary["lemma1_sweep"] = {{"limit", sweep.limit},
                               {"checked", sweep.checked},
                               {"failures", sweep.failures},
                               {"min_difference", sweep.min_difference},
                               {"min_difference_at", sweep.min_difference_at}};
    summary["theorem2"] = {{"n_max", t2.n_max},
                           {"n0", t2.n0 ? ordered_json(*t2.n0) : ordered_json(nullptr)},
                           {"identity_ok", t2.identity_ok}};
    summary["residual_per_x"] = {{"min", std::min_element(sums.begin(), sums.end(), [](auto& a, auto& b) {
                                             return a.residual_per_x < b.residual_per_x;
                                         })->residual_per_x},
                                 {"max", std::max_element(sums.begin(), sums.end(), [](auto& a, auto& b) {
                                             return a.residual_per_x < b.residual_per_x;
                                         })->residual_per_x}};

    if (cfg.format == OutputFormat::csv) {
        auto& os = out.stream();
        os << "x,s1,s2_ordered,s2_unordered,residual_per_x,lemma1_holds\n";
        CsvRow row;
        for (const auto& s : sums) {
            row.clear();
            row << s.x << s.s1 << s.s2 << s.s2_unordered << s.residual_per_x << s.lemma1_holds;
            os << row.str() << '\n';
        }
        out.close();
        emit_summary(out, summary, diag);
    } else {
        ordered_json rows = ordered_json::array();
        for (const auto& s : sums)
            rows.push_back({{"x", s.x},
                            {"s1", s.s1},
                            {"s2_ordered", s.s2},
                            {"s2_unordered", s.s2_unordered},
                            {"residual_per_x", s.residual_per_x},
                            {"lemma1_holds", s.lemma1_holds}});
        summary["rows"] = rows;
        out.stream() << summary.dump(2) << '\n';
        out.close();
    }
    return all_hold && sweep.failures.empty() ? kExitPass : kExitViolation;
}

int cmd_scan(const RunConfig& cfg, std::string_view which, std::ostream& diag)
{
    struct Kind
    {
        std::string_view name;
        unsigned bits;
        std::uint64_t min_limit;
    };
    static constexpr Kind kinds[] = {
        {"cg", scans::cg, 3},
        {"delta", scans::delta, 3},
        {"b", scans::deriv, 7},
        {"k", scans::deriv, 5},
        {"schoenfeld", scans::schoenfeld, 10},
        {"bbound", scans::bbound, 10},
        {"dusart", scans::dusart, kDusartUpperFrom + 1},
    };
    const auto* kind = std::find_if(std::begin(kinds), std::end(kinds),
                                    [&](const Kind& k) { return k.name == which; });
    if (kind == std::end(kinds))
        throw UsageError("unknown scan '" + std::string(which) + "'");
    require_limit(cfg, kind->min_limit, "scan " + std::string(which));
    if (!cfg.records_path.empty() && (cfg.resume || cfg.stop_after))
        throw UsageError("--records cannot be combined with checkpoint/resume");
    Output out(cfg.output_path);

    ScanEngine engine = start_engine(cfg, engine_options(cfg, kind->bits));

    std::unique_ptr<Output> records;
    CsvRow row;
    if (!cfg.records_path.empty()) {
        records = std::make_unique<Output>(cfg.records_path);
        auto& rs = records->stream();
        if (kind->bits == scans::delta) {
            rs << "n,p,delta,delta_hat\n";
            engine.on_delta = [&](const DeltaSample& s) {
                row.clear();
                row << s.n << s.p << (s.delta + s.delta_lo) << s.delta_hat;
                rs << row.str() << '\n';
            };
        } else if (kind->bits == scans::deriv) {
            rs << "n,p,b_prime,k_prime,rhs19,rhs24,ok19,ok24\n";
            engine.on_deriv = [&](const DerivRecord& r) {
                row.clear();
                row << r.n << r.p << r.b_prime << r.k_prime << r.rhs19 << r.rhs24 << r.ok19 << r.ok24;
                rs << row.str() << '\n';
            };
        } else {
            throw UsageError("--records is available for delta, b and k scans");
        }
    }

    if (!drive(engine, cfg, diag))
        return kExitPass;
    if (records)
        records->close();

    ScanReport rep;
    if (which == "cg") rep = engine.cg_report();
    else if (which == "delta") rep = engine.delta_report();
    else if (which == "b") rep = engine.condition19_report();
    else if (which == "k") rep = engine.condition24_report();
    else if (which == "schoenfeld") rep = engine.schoenfeld_report();
    else if (which == "bbound") rep = engine.bbound_report();
    else rep = engine.dusart_report();

    const ordered_json j = to_json(rep);
    if (cfg.format == OutputFormat::json) {
        out.stream() << j.dump(2) << '\n';
        out.close();
    } else {
        const bool grid = which == "schoenfeld" || which == "bbound" || which == "dusart";
        auto& os = out.stream();
        os << (grid ? "x" : "n") << '\n';
        for (const auto v : rep.violations)
            os << v << '\n';
        out.close();
        emit_summary(out, j, diag);
    }
    diag << "scan " << which << ": " << rep.violations.size() << " violation(s), max_ratio "
         << rep.max_ratio << " at " << rep.max_ratio_at << '\n';
    return rep.passed ? kExitPass : kExitViolation;
}

int cmd_figure1(const RunConfig& cfg, std::ostream& diag)
{
    require_limit(cfg, 5, "figure1");
    if (cfg.resume || cfg.stop_after)
        throw UsageError("figure1 streams rows directly and does not support checkpoint/resume");
    Output out(cfg.output_path);
    auto& os = out.stream();
    os << "p,k_prime,rhs24\n";

    EngineOptions opts = engine_options(cfg, scans::deriv);
    ScanEngine engine(opts);
    std::uint64_t rows = 0;
    std::uint64_t failing = 0;
    CsvRow row;
    engine.on_deriv = [&](const DerivRecord& r) {
        row.clear();
        row << r.p << r.k_prime << r.rhs24;
        os << row.str() << '\n';
        ++rows;
        if (r.p > kCondition24From && !r.ok24)
            ++failing;
    };
    engine.run(cfg.plan());
    out.close();
    if (!out.is_stdout())
        write_text_file(out.path() + ".plot.py", plot_script(out.path()));
    diag << "figure1: " << rows << " rows, " << failing << " failing k' > rhs24 beyond p = "
         << kCondition24From << '\n';
    return failing == 0 ? kExitPass : kExitViolation;
}

int cmd_fit(const RunConfig& cfg, std::ostream& diag)
{
    Output out(cfg.output_path);
    if (cfg.self_test) {
        constexpr double A = 0.2, alpha = 1.4;
        const FitResult f = synthetic_fit(A, alpha, std::max<std::size_t>(cfg.bins, 3));
        const bool ok = std::fabs(f.A - A) <= 1e-9 && std::fabs(f.alpha - alpha) <= 1e-9;
        ordered_json j = to_json(f);
        j["self_test"] = {{"A", A}, {"alpha", alpha}, {"recovered", ok}};
        out.stream() << j.dump(2) << '\n';
        out.close();
        return ok ? kExitPass : kExitViolation;
    }

    require_limit(cfg, kFitMinLimit, "fit");
    ScanEngine engine = start_engine(cfg, engine_options(cfg, scans::fit));
    if (!drive(engine, cfg, diag))
        return kExitPass;

    std::vector<BinnedPoint> bins;
    FitResult f;
    try {
        bins = bin_average_k(engine.fit_samples(), cfg.bins);
        f = fit_skewes(bins);
    } catch (const InsufficientDataError& e) {
        throw UsageError(std::string(e.what()) + " (raise --limit or lower --fit-stride)");
    }

    ordered_json j = to_json(f);
    j["samples"] = engine.fit_samples().size();
    if (cfg.format == OutputFormat::json) {
        j["bins"] = to_json(bins);
        out.stream() << j.dump(2) << '\n';
        out.close();
    } else {
        auto& os = out.stream();
        os << "log_x,mean_k,count\n";
        CsvRow row;
        for (const auto& b : bins) {
            row.clear();
            row << b.log_x << b.mean_k << b.count;
            os << row.str() << '\n';
        }
        out.close();
        emit_summary(out, j, diag);
    }
    const bool ok = f.A > 0.0 && f.alpha >= 1.0 && f.alpha <= 1.8;
    diag << "fit: A = " << f.A << ", alpha = " << f.alpha << ", log10 Sk1 = " << f.log10_sk1 << '\n';
    return ok ? kExitPass : kExitViolation;
}

int cmd_report(const RunConfig& cfg, std::ostream& diag)
{
    require_limit(cfg, 10, "report");
    Output out(cfg.output_path);

    ScanEngine engine = start_engine(cfg, engine_options(cfg, scans::all));
    if (!drive(engine, cfg, diag))
        return kExitPass;

    const Constants& k = cfg.constants;
    ordered_json doc;
    doc["tool"] = "primegap";
    doc["report_version"] = 1;
    doc["config"] = config_json(cfg);

    // Selberg pieces need the whole table; they are recomputed, not checkpointed.
    const SievePlan plan = cfg.plan();
    const SelbergTable table(plan);
    bool lemma_points_ok = true;
    // 10^3 points starting high enough that integer rounding keeps them distinct
    const std::uint64_t lo = std::clamp<std::uint64_t>(cfg.limit / 100000, 4, 1000);
    const auto xs = log_spaced_points(lo, cfg.limit, 1000);
    for (const auto x : xs)
        lemma_points_ok = lemma_points_ok && table.lemma1_check(x);
    const Lemma1Sweep sweep = lemma1_sweep(table, std::min(cfg.limit, std::max<std::uint64_t>(cfg.sweep_limit, 4)));
    doc["lemma1"] = {{"log_spaced_points", xs.size()},
                     {"log_spaced_hold", lemma_points_ok},
                     {"sweep_limit", sweep.limit},
                     {"sweep_checked", sweep.checked},
                     {"sweep_failures", sweep.failures},
                     {"min_difference", sweep.min_difference},
                     {"min_difference_at", sweep.min_difference_at},
                     {"holds", lemma_points_ok && sweep.failures.empty()}};

    const PartialSumState& ps = engine.partial_sums();
    const auto n0 = ps.n0();
    doc["theorem2"] = {{"n_max", ps.N},
                       {"n0", n0 ? ordered_json(*n0) : ordered_json(nullptr)},
                       {"identity_ok", ps.identity_ok}};

    const ScanReport cg = engine.cg_report();
    const ScanReport c19 = engine.condition19_report();
    const ScanReport c24 = engine.condition24_report();
    const ScanReport sch = engine.schoenfeld_report();
    const ScanReport bb = engine.bbound_report();
    doc["cramer_granville"] = to_json(cg);
    doc["delta"] = to_json(engine.delta_report());
    doc["condition19"] = to_json(c19);
    doc["condition24"] = to_json(c24);
    doc["schoenfeld"] = to_json(sch);
    doc["bbound"] = to_json(bb);
    const bool have_dusart = cfg.limit > kDusartUpperFrom;
    doc["dusart"] = have_dusart ? to_json(engine.dusart_report()) : ordered_json(nullptr);

    std::optional<FitResult> fit;
    if (cfg.limit >= kFitMinLimit) {
        try {
            fit = fit_skewes(bin_average_k(engine.fit_samples(), cfg.bins));
        } catch (const std::exception& e) {
            diag << "report: fit skipped: " << e.what() << '\n';
        }
    }
    doc["fit"] = fit ? to_json(*fit) : ordered_json(nullptr);

    const SelbergTable small(std::max(kP10000, std::uint64_t{4}));
    const SelbergSums at = small.sums_at(kP10000);
    const double d_ord = at.s1 - at.s2;
    const double d_unord = at.s1 - at.s2_unordered;
    const double smooth = smooth_s1(static_cast<double>(kP10000)) - smooth_s2(static_cast<double>(kP10000));
    doc["selberg_104729"] = {{"x", kP10000},
                             {"s1", at.s1},
                             {"s2_ordered", at.s2},
                             {"s2_unordered", at.s2_unordered},
                             {"s1_minus_s2_ordered", d_ord},
                             {"s1_minus_s2_unordered", d_unord},
                             {"quoted_value", kQuotedS1MinusS2},
                             {"smooth_prediction", smooth},
                             {"matches_ordered", std::fabs(d_ord - kQuotedS1MinusS2) < 1.0},
                             {"matches_unordered", std::fabs(d_unord - kQuotedS1MinusS2) < 1.0}};

    doc["analytic"] = {{"monotonicity_threshold", monotonicity_threshold(k.c, k.B)},
                       {"skewes_log10", {{"1.3", skewes_log10(1.3)},
                                         {"1.5", skewes_log10(1.5)},
                                         {"2.0", skewes_log10(2.0)}}},
                       {"mean_kprime_sk1_1e14", skewes_mean_kprime(1e14)}};
    doc["li_check_max_rel_error"] = engine.li_check_max_error();

    // For n >= 5 the gap ratio stays below 1 (only small n may violate).
    const bool cg_ok = std::all_of(cg.violations.begin(), cg.violations.end(),
                                   [](std::uint64_t n) { return n <= 4; }) &&
                       cg.max_ratio < kRecordGapRatio;
    ordered_json checks = {{"lemma1", lemma_points_ok && sweep.failures.empty()},
                           {"theorem2_identity", ps.identity_ok},
                           {"theorem2_stable", n0.has_value()},
                           {"cramer_granville_beyond_n4", cg_ok},
                           {"condition19", c19.passed},
                           {"condition24", c24.passed},
                           {"schoenfeld_rh", sch.passed},
                           {"bbound", bb.passed},
                           {"dusart", have_dusart ? engine.dusart_report().passed : true},
                           {"li_check", engine.li_check_max_error() <= 1e-10}};
    bool passed = true;
    for (const auto& [name, v] : checks.items())
        passed = passed && v.get<bool>();
    doc["checks"] = checks;
    doc["passed"] = passed;

    out.stream() << doc.dump(2) << '\n';
    out.close();
    return passed ? kExitPass : kExitViolation;
}

// ---------------------------------------------------------------------------
// argv

int run_cli(int argc, const char* const* argv, std::ostream& diag)
{
    CLI::App app{"Prime gap, Selberg sum and prime-counting fluctuation scans", "primegap"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value configuration file");

    RunConfig cfg;
    std::string limit_text = "1e8";
    std::string segment_text;
    std::string stop_text;
    std::string every_text;
    std::string sweep_text;
    std::string stride_text;
    std::string format_text = "csv";
    std::string checkpoint;
    std::string which;

    auto env = [](const char* name) { return std::string("PRIMEGAP_") + name; };
    app.add_option("--limit", limit_text, "upper limit x (accepts 1e8 or 10^8)")->envname(env("LIMIT"));
    app.add_option("--c", cfg.constants.c, "gap constant c")->envname(env("C"));
    app.add_option("--B", cfg.constants.B, "bound on |b(x)|")->envname(env("B"));
    app.add_option("--K", cfg.constants.K_all, "Schoenfeld-type constant for all x")->envname(env("K"));
    app.add_option("--K-rh", cfg.constants.K_rh, "Schoenfeld constant")->envname(env("K_RH"));
    app.add_option("--third-coefficient", cfg.constants.third_coefficient,
                   "coefficient of x/log^3 x in the smooth count")
        ->envname(env("THIRD_COEFFICIENT"));
    app.add_option("--workers", cfg.workers, "sieve threads")->check(CLI::PositiveNumber)->envname(env("WORKERS"));
    app.add_option("--segment-size", segment_text, "sieve segment span")->envname(env("SEGMENT_SIZE"));
    app.add_option("--out", cfg.output_path, "output path, - for stdout")->envname(env("OUT"));
    app.add_option("--format", format_text, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->envname(env("FORMAT"));
    app.add_option("--checkpoint", checkpoint, "checkpoint file")->envname(env("CHECKPOINT"));
    app.add_flag("--resume", cfg.resume, "continue from --checkpoint")->envname(env("RESUME"));
    app.add_option("--stop-after", stop_text, "halt after this prime and write the checkpoint")
        ->envname(env("STOP_AFTER"));
    app.add_option("--checkpoint-every", every_text, "checkpoint spacing in x")
        ->envname(env("CHECKPOINT_EVERY"));

    auto* selberg = app.add_subcommand("selberg", "S1, S2, the Selberg residual and the partial-sum scan");
    selberg->add_option("--points", cfg.points, "log-spaced sample points")->check(CLI::PositiveNumber);
    selberg->add_option("--sweep-limit", sweep_text, "check every prime up to this");

    auto* scan = app.add_subcommand("scan", "run one scan");
    scan->add_option("--which", which, "cg|b|k|delta|schoenfeld|dusart|bbound")
        ->required()
        ->check(CLI::IsMember(scan_names()));
    scan->add_option("--records", cfg.records_path, "per-record CSV for delta, b and k");

    auto* figure1 = app.add_subcommand("figure1", "k'(p) against the condition-24 curve");

    auto* fit = app.add_subcommand("fit", "fit mean k(x) against log log log x");
    fit->add_option("--bins", cfg.bins, "log-x bins")->check(CLI::PositiveNumber);
    fit->add_option("--fit-stride", stride_text, "sample every n-th prime");
    fit->add_option("--fit-x-min", cfg.fit_x_min, "smallest sampled x");
    fit->add_flag("--self-test", cfg.self_test, "recover a synthetic exact model");

    auto* report = app.add_subcommand("report", "every check in one JSON document");
    report->add_option("--sweep-limit", sweep_text, "check every prime up to this");
    report->add_option("--bins", cfg.bins, "log-x bins")->check(CLI::PositiveNumber);

    for (auto* sub : {selberg, scan, figure1, fit, report})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp& e) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        diag << "primegap: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        cfg.limit = parse_count(limit_text);
        if (cfg.limit < 2)
            throw UsageError("--limit must be >= 2");
        if (!segment_text.empty())
            cfg.segment_size = parse_count(segment_text);
        if (!stop_text.empty())
            cfg.stop_after = parse_count(stop_text);
        if (!every_text.empty())
            cfg.checkpoint_every = parse_count(every_text);
        if (!sweep_text.empty())
            cfg.sweep_limit = parse_count(sweep_text);
        if (!stride_text.empty())
            cfg.fit_stride = parse_count(stride_text);
        if (cfg.fit_stride == 0)
            throw UsageError("--fit-stride must be >= 1");
        if (!checkpoint.empty())
            cfg.checkpoint_path = checkpoint;
        cfg.format = format_text == "json" ? OutputFormat::json : OutputFormat::csv;
        cfg.constants.validate();
        cfg.plan().validate();

        if (selberg->parsed()) return cmd_selberg(cfg, diag);
        if (scan->parsed()) return cmd_scan(cfg, which, diag);
        if (figure1->parsed()) return cmd_figure1(cfg, diag);
        if (fit->parsed()) return cmd_fit(cfg, diag);
        return cmd_report(cfg, diag);
    } catch (const std::exception& e) {
        diag << "primegap: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace primegap
