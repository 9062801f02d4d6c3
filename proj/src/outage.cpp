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

#include "secout/outage.hpp"

#include <cmath>
#include <sstream>

#include "secout/errors.hpp"
#include "secout/mgf_product.hpp"
#include "secout/special.hpp"

namespace secout {

namespace {

/// Probabilities below this are reported as 0 with the underflow flag;
/// survival probabilities below it saturate the outage at 1 likewise.
constexpr double underflow_floor = 1e-300;
const double log_underflow_floor = std::log(underflow_floor);

void check_gamma(double gamma) {
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        std::ostringstream msg;
        msg << "outage threshold must be positive and finite, got " << gamma;
        throw validation_error(msg.str());
    }
}

/// Turns log Pr{no outage} into the outage probability with flags.
MetricValue outage_from_log_survival(double log_survival) {
    MetricValue out;
    if (log_survival < log_underflow_floor) {
        out.value = 1.0;
        out.underflow = true;
        return out;
    }
    out.value = -std::expm1(log_survival);
    if (out.value > 0.0 && out.value < underflow_floor) {
        out.value = 0.0;
        out.underflow = true;
    } else if (out.value == 0.0 && log_survival < 0.0) {
        // Strictly positive outage that double resolution cannot hold.
        out.underflow = true;
    }
    return out;
}

/// sum_{i=0}^{size-1} (p^i / i!) * weights[i] in signed-log space.
SignedLog poisson_weighted_sum(double p, const std::vector<SignedLog> &weights) {
    const double log_p = std::log(p);
    SignedLog acc = SignedLog::zero();
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += SignedLog::from_log(static_cast<double>(i) * log_p -
                                   log_factorial(static_cast<int>(i))) *
               weights[i];
    }
    return acc;
}

TiltedMomentSeries interference_series(const InterferenceScenario &scenario, double p,
                                       int order) {
    if (scenario.interferers.empty()) {
        throw validation_error("interference scenario needs at least one interferer branch");
    }
    std::vector<TiltedMomentSeries> factors;
    factors.reserve(scenario.interferers.size());
    for (const ScaledModel &branch : scenario.interferers) {
        factors.push_back(factor_series(branch, p, order));
    }
    return product_series(factors, order);
}

} // namespace

int analytic_desired_shape(const FadingModel &desired) {
    validate(desired);
    if (desired.family == Family::Rayleigh) {
        return 1;
    }
    if (desired.family != Family::NakagamiM) {
        std::ostringstream msg;
        msg << "the closed-form outage path supports Rayleigh or integer-m Nakagami desired "
               "links only, not "
            << family_name(desired.family) << "; use the Monte Carlo estimator instead";
        throw unsupported_configuration(msg.str());
    }
    const double m = desired.m;
    if (m != std::floor(m)) {
        std::ostringstream msg;
        msg << "the closed-form outage path needs an integer Nakagami shape, got m = " << m
            << "; use the Monte Carlo estimator for non-integer shapes";
        throw unsupported_configuration(msg.str());
    }
    if (m < 1.0 || m > static_cast<double>(max_derivative_order + 1)) {
        std::ostringstream msg;
        msg << "desired-link Nakagami shape must be an integer in [1, "
            << (max_derivative_order + 1) << "], got " << m;
        throw validation_error(msg.str());
    }
    return static_cast<int>(m);
}

double op_n(const FadingModel &desired, double gamma) {
    validate(desired);
    check_gamma(gamma);
    return cdf(desired, gamma);
}

MetricValue op_ni(const InterferenceScenario &scenario, double gamma) {
    check_gamma(gamma);
    const int m = analytic_desired_shape(scenario.desired);
    const double p = m * gamma / scenario.desired.mean_snr;
    const TiltedMomentSeries series = interference_series(scenario, p, m - 1);

    std::vector<SignedLog> weights;
    weights.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        SignedLog inner = SignedLog::zero();
        for (int j = 0; j <= i; ++j) {
            inner += SignedLog::from_log(log_choose(i, j)) *
                     series.terms[static_cast<std::size_t>(j)];
        }
        weights.push_back(inner);
    }
    const SignedLog sum = poisson_weighted_sum(p, weights);
    return outage_from_log_survival(-p + sum.log_magnitude());
}

MetricValue op_i(const InterferenceScenario &scenario, double gamma) {
    check_gamma(gamma);
    const int m = analytic_desired_shape(scenario.desired);
    const double p = m * gamma / scenario.desired.mean_snr;
    const TiltedMomentSeries series = interference_series(scenario, p, m - 1);
    const SignedLog sum = poisson_weighted_sum(p, series.terms);
    return outage_from_log_survival(sum.log_magnitude());
}

} // namespace secout
