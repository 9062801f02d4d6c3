// SPDX-License-Identifier: Apache-2.0
//
// secout - outage and secrecy outage analysis for fading wireless channels
// Copyright (C) 2026 the secout authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "secout/special.hpp"

#include "secout/errors.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace secout {

namespace {

constexpr int table_size = 512;

const std::array<double, table_size> &log_factorial_table() {
    static const std::array<double, table_size> table = [] {
        std::array<double, table_size> t{};
        t[0] = 0.0;
        for (int n = 1; n < table_size; ++n)
            t[n] = t[n - 1] + std::log(static_cast<double>(n));
        return t;
    }();
    return table;
}

// Series expansion of P(a, x), converges well for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-17)
            break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a, x) (modified Lentz), converges well for x >= a + 1.
double gamma_q_contfrac(double a, double x) {
    constexpr double fpmin = std::numeric_limits<double>::min() / 1e-30;
    double b = x + 1.0 - a;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < fpmin)
            d = fpmin;
        c = b + an / c;
        if (std::fabs(c) < fpmin)
            c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16)
            break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

} // namespace

double log_factorial(int n) {
    if (n < 0)
        throw validation_error("log_factorial: negative argument");
    if (n < table_size)
        return log_factorial_table()[static_cast<std::size_t>(n)];
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_choose(int n, int k) {
    if (k < 0 || n < 0 || k > n)
        throw validation_error("log_choose: require 0 <= k <= n");
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double regularized_gamma_lower(double a, double x) {
    if (!(a > 0.0) || !(x >= 0.0))
        throw validation_error("regularized_gamma_lower: require a > 0, x >= 0");
    if (x == 0.0)
        return 0.0;
    if (x < a + 1.0)
        return gamma_p_series(a, x);
    return 1.0 - gamma_q_contfrac(a, x);
}

double regularized_gamma_upper(double a, double x) {
    if (!(a > 0.0) || !(x >= 0.0))
        throw validation_error("regularized_gamma_upper: require a > 0, x >= 0");
    if (x == 0.0)
        return 1.0;
    if (x < a + 1.0)
        return 1.0 - gamma_p_series(a, x);
    return gamma_q_contfrac(a, x);
}

double marcum_q1_complement(double a, double b) {
    if (!(a >= 0.0) || !(b >= 0.0))
        throw validation_error("marcum_q1_complement: require a >= 0, b >= 0");
    if (b == 0.0)
        return 0.0;
    // Poisson mixture of Erlang CDFs:
    //   1 - Q1(a, b) = sum_j pois(j; a^2/2) P(j + 1, b^2/2)
    // Every term is nonnegative; P(j+1, .) <= 1, so once the accumulated
    // Poisson mass exceeds 1 - tol the remaining contribution is below tol.
    const double lambda = 0.5 * a * a;
    const double w = 0.5 * b * b;
    const double log_lambda =
        lambda > 0.0 ? std::log(lambda) : -std::numeric_limits<double>::infinity();
    constexpr double tail_tol = 1e-14;

    double acc = 0.0;
    double pois_mass = 0.0;
    for (int j = 0; j < 40000; ++j) {
        const double log_weight =
            (j == 0) ? -lambda : -lambda + j * log_lambda - log_factorial(j);
        const double weight = std::exp(log_weight);
        pois_mass += weight;
        if (weight > 0.0)
            acc += weight * regularized_gamma_lower(static_cast<double>(j) + 1.0, w);
        if (1.0 - pois_mass < tail_tol)
            break;
    }
    return acc;
}

double marcum_q1(double a, double b) { return 1.0 - marcum_q1_complement(a, b); }

} // namespace secout
