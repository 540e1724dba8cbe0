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

/// @file analytic.hpp
/// @brief Closed-form pieces: Li(x), smooth Selberg sums, Dusart bounds,
/// the monotonicity threshold, derivative-condition right-hand sides and
/// the Skewes map.
#pragma once

#include <numbers>

namespace primegap {

/// Tunable constants shared by every scan.
struct Constants
{
    double c = 1.0;                                 ///< gap constant in g_n < c log^2 p_n
    double B = 5.0;                                 ///< bound on |b(x)|
    double K_rh = 1.0 / (8.0 * std::numbers::pi);   ///< Schoenfeld constant for x > 2657
    double K_all = 1.0 / 3.0;                       ///< Schoenfeld-type constant meant for all x
    double granville_c = 1.122918;                  ///< 2 e^{-gamma}
    /// Coefficient of x/log^3 x subtracted when forming fhat.
    double third_coefficient = 2.0;

    /// Throws std::invalid_argument when an invariant is broken.
    void validate() const;
};

/// Ei(u) for u > 0.
double expint_ei(double u);

/// Li(x) = integral from 2 to x of dt / log t. Throws std::domain_error for x < 2.
double li(double x);

/// Li(x) by adaptive Gauss-Kronrod quadrature. Slow; used to validate li().
double li_quadrature(double x, double tolerance = 1e-14);

double smooth_s1(double x);
double smooth_s2(double x);

struct DusartBounds
{
    double lower;
    double upper;
};

DusartBounds dusart_bounds(double x);

/// Lowest x beyond which Delta(x) grows when b(x) sits at -B.
double monotonicity_threshold(double c, double B);

double condition19_rhs(double p, double c);
double condition24_rhs(double p, double c);

/// log10 of exp(exp(exp(alpha))). Throws std::overflow_error when the inner
/// exponent itself overflows a double.
double skewes_log10(double alpha);

/// Average k' over (2, sk1), i.e. 1 / (8 pi sk1).
double skewes_mean_kprime(double sk1);

} // namespace primegap
