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

#ifndef SECOUT_TESTS_SUPPORT_HPP
#define SECOUT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include <secout/fading.hpp>

namespace secout::test {

inline double rel_diff(double a, double b) {
    const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / scale;
}

struct DerivativeResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

/**
 * nth derivative of f at x by central differences on shrinking steps,
 * accelerated with a Neville tableau in h^2 (the central stencil's error
 * expansion has even powers only). The best tableau entry is the one
 * whose agreement with its neighbors is tightest, but that agreement is
 * never trusted below the row's roundoff floor eps * sum|w_k f| / h^n:
 * once cancellation noise dominates, neighboring entries can agree by
 * coincidence while both are wrong, and the floor keeps such entries from
 * outbidding a genuinely converged one. Refinement stops once the
 * diagonal deteriorates well past the best estimate (Ridders' rule).
 *
 * All internal arithmetic runs in long double because the stencil divides
 * by h^n: at n = 6 the cancellation noise of a double-precision f already
 * caps the achievable accuracy near 1e-5. Pass a callable taking long
 * double (see mgf_ld) to get the full benefit.
 *
 * h0 should be a modest fraction of the distance to the nearest
 * singularity of f.
 */
template <typename F>
DerivativeResult richardson_derivative(F f, double x, int n, double h0) {
    constexpr int levels = 13;
    // Central-difference weights: f^(n)(x) ~ h^-n sum_k (-1)^k C(n,k) f(x + (n/2 - k) h).
    std::vector<long double> weights(static_cast<std::size_t>(n) + 1);
    weights[0] = 1.0L;
    for (int k = 1; k <= n; ++k) {
        weights[static_cast<std::size_t>(k)] =
            -weights[static_cast<std::size_t>(k - 1)] * (n - k + 1) / k;
    }

    const long double xl = x;
    // value of the stencil plus the magnitude sum that scales its roundoff
    auto stencil = [&](long double h, long double &noise) {
        long double acc = 0.0L;
        long double mag = 0.0L;
        for (int k = 0; k <= n; ++k) {
            const long double term =
                weights[static_cast<std::size_t>(k)] * f(xl + (0.5L * n - k) * h);
            acc += term;
            mag += std::abs(term);
        }
        const long double scale = std::pow(h, n);
        noise = 4.0L * std::numeric_limits<long double>::epsilon() * mag / scale;
        return acc / scale;
    };

    std::array<std::array<long double, levels>, levels> tableau{};
    long double best_value = 0.0L;
    long double best_err = std::numeric_limits<long double>::infinity();

    long double h = h0;
    for (int i = 0; i < levels; ++i, h *= 0.5L) {
        long double floor = 0.0L;
        tableau[static_cast<std::size_t>(i)][0] = stencil(h, floor);
        long double factor = 4.0L;
        for (int j = 1; j <= i; ++j, factor *= 4.0L) {
            const long double fine =
                tableau[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
            const long double coarse =
                tableau[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            const long double extrapolated = fine + (fine - coarse) / (factor - 1.0L);
            tableau[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = extrapolated;
            const long double err = std::max(
                {std::abs(extrapolated - fine), std::abs(extrapolated - coarse), floor});
            if (err < best_err) {
                best_err = err;
                best_value = extrapolated;
            }
        }
        if (i > 2 && std::abs(tableau[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] -
                              tableau[static_cast<std::size_t>(i - 1)]
                                     [static_cast<std::size_t>(i - 1)]) >= 4.0L * best_err) {
            break;
        }
    }
    DerivativeResult best;
    best.value = static_cast<double>(best_value);
    best.error_estimate = static_cast<double>(best_err);
    return best;
}

/// The plain (zeroth-order) MGFs restated in long double, for use as the
/// differentiation target when checking the closed-form derivatives.
inline long double mgf_ld(const FadingModel &model, long double s) {
    const long double snr = model.mean_snr;
    switch (model.family) {
    case Family::Rayleigh:
        return 1.0L / (1.0L - s * snr);
    case Family::NakagamiM: {
        const long double m = model.m;
        return std::pow(m / (m - s * snr), m);
    }
    case Family::Rice: {
        const long double k = model.rice_k;
        const long double denom = 1.0L + k - s * snr;
        return (1.0L + k) / denom * std::exp(k * s * snr / denom);
    }
    }
    return std::numeric_limits<long double>::quiet_NaN();
}

/// Half-width of the Dvoretzky-Kiefer-Wolfowitz confidence band for an
/// empirical CDF from n samples at confidence 1 - alpha.
inline double dkw_band(std::size_t n, double alpha) {
    return std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(n)));
}

/// Two-sample Kolmogorov-Smirnov statistic sup_x |F1(x) - F2(x)|.
/// Inputs are modified (sorted).
inline double ks_statistic(std::vector<double> &xs, std::vector<double> &ys) {
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    const double nx = static_cast<double>(xs.size());
    const double ny = static_cast<double>(ys.size());
    std::size_t i = 0;
    std::size_t j = 0;
    double stat = 0.0;
    while (i < xs.size() && j < ys.size()) {
        if (xs[i] <= ys[j]) {
            ++i;
        } else {
            ++j;
        }
        stat = std::max(stat, std::abs(static_cast<double>(i) / nx -
                                       static_cast<double>(j) / ny));
    }
    return stat;
}

/// Rejection threshold for the two-sample KS test at level alpha:
/// c(alpha) * sqrt((n + m) / (n m)), c(0.01) = 1.628.
inline double ks_threshold(std::size_t n, std::size_t m, double c_alpha) {
    const double dn = static_cast<double>(n);
    const double dm = static_cast<double>(m);
    return c_alpha * std::sqrt((dn + dm) / (dn * dm));
}

/// Closed-form rate-outage probability for a Rayleigh desired link and a
/// single-branch Rayleigh eavesdropper:
/// 1 - (snr_d / (snr_d + 2^rate snr_e)) exp(-(2^rate - 1) / snr_d).
inline double rayleigh_rayleigh_ps(double snr_d, double snr_e, double rate) {
    const double pow2 = std::exp2(rate);
    return 1.0 - snr_d / (snr_d + pow2 * snr_e) * std::exp(-(pow2 - 1.0) / snr_d);
}

} // namespace secout::test

#endif // SECOUT_TESTS_SUPPORT_HPP
