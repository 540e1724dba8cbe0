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

#include "primegap/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "primegap/compensated.hpp"

namespace primegap {

namespace {

// li(2) = Ei(log 2)
constexpr double kLiOfTwo = 1.0451637801174927848;

// Below this argument Ei uses the power series, above it the asymptotic
// expansion. At u = 40 the smallest asymptotic term is below 1e-16 relative.
constexpr double kEiSeam = 40.0;

double ei_series(double u)
{
    CompensatedSum sum;
    double term = 1.0;
    for (int k = 1; k < 500; ++k) {
        term *= u / k;
        const double contrib = term / k;
        sum += contrib;
        if (k > u && contrib < 1e-18 * sum.value())
            break;
    }
    return std::numbers::egamma + std::log(u) + sum.value();
}

double ei_asymptotic(double u)
{
    CompensatedSum sum;
    double term = 1.0;
    sum += term;
    for (int k = 1; k < 200; ++k) {
        const double next = term * k / u;
        if (next >= term || next < 1e-18)
            break;
        term = next;
        sum += term;
    }
    return std::exp(u) / u * sum.value();
}

double inv_log(double t) { return 1.0 / std::log(t); }

} // namespace

void Constants::validate() const
{
    if (!(c > 0.0))
        throw std::invalid_argument("constants: c must be positive");
    if (!(B > 0.0))
        throw std::invalid_argument("constants: B must be positive");
    if (!(K_rh > 0.0 && K_rh < K_all))
        throw std::invalid_argument("constants: require 0 < K_rh < K_all");
    if (!std::isfinite(third_coefficient))
        throw std::invalid_argument("constants: third_coefficient must be finite");
}

double expint_ei(double u)
{
    if (!(u > 0.0))
        throw std::domain_error("expint_ei: argument must be positive");
    return u < kEiSeam ? ei_series(u) : ei_asymptotic(u);
}

double li(double x)
{
    if (!(x >= 2.0))
        throw std::domain_error("li: x must be >= 2");
    if (x < 4.0) {
        // Ei(log x) - Ei(log 2) cancels badly near 2; integrate directly.
        return boost::math::quadrature::gauss<double, 30>::integrate(inv_log, 2.0, x);
    }
    return expint_ei(std::log(x)) - kLiOfTwo;
}

double li_quadrature(double x, double tolerance)
{
    if (!(x >= 2.0))
        throw std::domain_error("li_quadrature: x must be >= 2");
    using Quad = boost::math::quadrature::gauss_kronrod<double, 61>;
    CompensatedSum sum;
    double a = 2.0;
    while (a < x) {
        const double b = std::min(a * 4.0, x);
        sum += Quad::integrate(inv_log, a, b, 15, tolerance);
        a = b;
    }
    return sum.value();
}

double smooth_s1(double x) { return x * std::log(x) - x - 2.0 * std::numbers::ln2 + 2.0; }

double smooth_s2(double x) { return x * std::log(x) - (2.0 + std::numbers::ln2) * x + 4.0; }

DusartBounds dusart_bounds(double x)
{
    const double L = std::log(x);
    const double head = x / L + x / (L * L);
    const double tail = x / (L * L * L);
    return {head + 1.8 * tail, head + 2.51 * tail};
}

double monotonicity_threshold(double c, double B)
{
    if (!(c > 0.0) || !(B >= 0.0))
        throw std::domain_error("monotonicity_threshold: need c > 0 and B >= 0");
    return std::exp(1.0 / (2.0 * c) + std::sqrt(1.0 / (4.0 * c * c) + B));
}

double condition19_rhs(double p, double c)
{
    const double L = std::log(p);
    return -(L * L / p) * (1.0 - 1.0 / (c * L));
}

double condition24_rhs(double p, double c)
{
    const double L = std::log(p);
    return -(1.0 / (std::sqrt(p) * L * L)) * (1.0 - 1.0 / (c * L));
}

double skewes_log10(double alpha)
{
    const double inner = std::exp(alpha);
    if (!(inner < std::log(std::numeric_limits<double>::max())))
        throw std::overflow_error("skewes_log10: exp(exp(alpha)) overflows for alpha = " +
                                  std::to_string(alpha));
    return std::exp(inner) / std::numbers::ln10;
}

double skewes_mean_kprime(double sk1)
{
    if (!(sk1 > 0.0))
        throw std::domain_error("skewes_mean_kprime: sk1 must be positive");
    return 1.0 / (8.0 * std::numbers::pi * sk1);
}

} // namespace primegap
