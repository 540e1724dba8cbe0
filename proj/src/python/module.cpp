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

#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "primegap/analytic.hpp"
#include "primegap/commands.hpp"
#include "primegap/fit.hpp"
#include "primegap/fluct.hpp"
#include "primegap/selberg.hpp"
#include "primegap/sieve.hpp"

namespace py = pybind11;
using namespace primegap;

namespace {

SievePlan plan_for(std::uint64_t limit, unsigned workers)
{
    SievePlan p;
    p.limit = limit;
    p.worker_count = workers;
    return p;
}

py::dict report_dict(const ScanReport& r)
{
    py::dict d;
    d["scan"] = r.scan;
    d["limit"] = r.limit;
    d["c"] = r.c;
    d["violations"] = r.violations;
    d["max_ratio"] = r.max_ratio;
    d["max_ratio_at"] = r.max_ratio_at;
    d["thresholds"] = r.thresholds;
    d["passed"] = r.passed;
    return d;
}

} // namespace

PYBIND11_MODULE(_primegap, m)
{
    m.doc() = "Prime gap and prime-counting fluctuation scans";

    py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);
    py::register_exception<InsufficientDataError>(m, "InsufficientDataError", PyExc_ValueError);

    m.def("primes_up_to", [](std::uint64_t x, unsigned workers) {
        return primes_up_to(plan_for(x, workers));
    }, py::arg("x"), py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());
    m.def("prime_count", [](std::uint64_t x, unsigned workers) {
        return prime_count(plan_for(x, workers));
    }, py::arg("x"), py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());
    m.def("nth_prime", py::overload_cast<std::uint64_t>(&nth_prime), py::arg("n"));

    m.def("li", &li, py::arg("x"));
    m.def("li_quadrature", &li_quadrature, py::arg("x"), py::arg("tolerance") = 1e-14);
    m.def("expint_ei", &expint_ei, py::arg("u"));
    m.def("monotonicity_threshold", &monotonicity_threshold, py::arg("c") = 1.0, py::arg("B") = 5.0);
    m.def("skewes_log10", &skewes_log10, py::arg("alpha"));
    m.def("condition19_rhs", &condition19_rhs, py::arg("p"), py::arg("c") = 1.0);
    m.def("condition24_rhs", &condition24_rhs, py::arg("p"), py::arg("c") = 1.0);

    m.def("s1", &s1, py::arg("x"));
    m.def("theta", &theta, py::arg("y"));
    m.def("s2", [](std::uint64_t x, bool ordered) {
        return s2(x, ordered ? Pairing::ordered : Pairing::unordered);
    }, py::arg("x"), py::arg("ordered") = true);
    m.def("lemma1_check", &lemma1_check, py::arg("x"));

    py::class_<FluctuationSample>(m, "FluctuationSample")
        .def_readonly("x", &FluctuationSample::x)
        .def_readonly("pi", &FluctuationSample::pi)
        .def_readonly("li", &FluctuationSample::li)
        .def_readonly("f", &FluctuationSample::f)
        .def_readonly("fhat", &FluctuationSample::fhat)
        .def_readonly("b", &FluctuationSample::b)
        .def_readonly("k", &FluctuationSample::k);
    m.def("fluctuation_at", [](std::uint64_t x) { return fluctuation_at(x); }, py::arg("x"));

    m.def("cg_scan", [](std::uint64_t limit, double c) { return report_dict(cg_scan(limit, c)); },
          py::arg("limit"), py::arg("c") = 1.0);
    m.def("condition24_scan", [](std::uint64_t limit, double c) {
        return report_dict(condition24_scan(limit, c));
    }, py::arg("limit"), py::arg("c") = 1.0);
    m.def("schoenfeld_scan", [](std::uint64_t limit) { return report_dict(schoenfeld_scan(limit)); },
          py::arg("limit"));

    m.def("fit_skewes", [](const std::vector<double>& log_x, const std::vector<double>& mean_k) {
        if (log_x.size() != mean_k.size())
            throw py::value_error("log_x and mean_k differ in length");
        std::vector<BinnedPoint> pts;
        for (std::size_t i = 0; i < log_x.size(); ++i)
            pts.push_back({log_x[i], mean_k[i], 1});
        const FitResult f = fit_skewes(pts);
        py::dict d;
        d["A"] = f.A;
        d["alpha"] = f.alpha;
        d["log10_sk1"] = f.log10_sk1;
        d["rms_residual"] = f.rms_residual;
        return d;
    }, py::arg("log_x"), py::arg("mean_k"));

    // Returns (exit_code, diagnostics).
    m.def("run_cli", [](std::vector<std::string> args) {
        args.insert(args.begin(), "primegap");
        std::vector<const char*> argv;
        for (const auto& a : args)
            argv.push_back(a.c_str());
        std::ostringstream diag;
        const int code = run_cli(static_cast<int>(argv.size()), argv.data(), diag);
        return py::make_tuple(code, diag.str());
    }, py::arg("args"));
}
