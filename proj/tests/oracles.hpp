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

// Independent reference implementations. Nothing here calls into the library.
#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace oracle {

inline bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

inline std::vector<std::uint64_t> primes(std::uint64_t x)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; n <= x; ++n)
        if (is_prime(n))
            out.push_back(n);
    return out;
}

// Li(x) = int_{log 2}^{log x} e^u / u du, by tanh-sinh in the log variable.
inline double li(double x)
{
    if (x == 2.0)
        return 0.0;
    boost::math::quadrature::tanh_sinh<long double> q;
    const long double a = std::log(2.0L);
    const long double b = std::log(static_cast<long double>(x));
    auto f = [](long double u) { return std::exp(u) / u; };
    // split so each piece spans at most one unit of u
    long double total = 0.0L;
    for (long double lo = a; lo < b; lo += 1.0L)
        total += q.integrate(f, lo, std::min(b, lo + 1.0L), 1e-18L);
    return static_cast<double>(total);
}

// Sum over ordered prime pairs with pq <= x, straight double loop.
inline long double s2_pairs(std::uint64_t x, const std::vector<std::uint64_t>& ps, bool ordered)
{
    long double s = 0.0L;
    for (auto p : ps) {
        if (p * 2 > x)
            break;
        for (auto q : ps) {
            if (p * q > x)
                break;
            if (!ordered && q < p)
                continue;
            s += std::log(static_cast<long double>(p)) * std::log(static_cast<long double>(q));
        }
    }
    return s;
}

// Sum of log^2 p two ways: ascending and descending, in long double.
inline std::pair<long double, long double> s1_two_paths(const std::vector<std::uint64_t>& ps, std::uint64_t x)
{
    long double up = 0.0L, down = 0.0L;
    std::vector<long double> terms;
    for (auto p : ps) {
        if (p > x)
            break;
        const long double l = std::log(static_cast<long double>(p));
        terms.push_back(l * l);
    }
    for (auto t : terms)
        up += t;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it)
        down += *it;
    return {up, down};
}

// Least squares y = c0 + c1 u by QR.
inline std::pair<double, double> line_fit(const std::vector<double>& u, const std::vector<double>& y)
{
    Eigen::MatrixXd A(u.size(), 2);
    Eigen::VectorXd b(y.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        A(i, 0) = 1.0;
        A(i, 1) = u[i];
        b(i) = y[i];
    }
    const Eigen::Vector2d c = A.colPivHouseholderQr().solve(b);
    return {c(0), c(1)};
}

} // namespace oracle
