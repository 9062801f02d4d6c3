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

#include "secout/secrecy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "secout/errors.hpp"

namespace secout {

void validate(const SecrecyScenario &scenario) {
    validate(scenario.desired);
    if (scenario.eavesdropper_branches.empty()) {
        throw validation_error("secrecy scenario needs at least one eavesdropper branch");
    }
    for (const FadingModel &branch : scenario.eavesdropper_branches) {
        validate(branch);
    }
    if (!(scenario.rate >= 0.0) || !std::isfinite(scenario.rate)) {
        std::ostringstream msg;
        msg << "secrecy rate must be nonnegative and finite, got " << scenario.rate;
        throw validation_error(msg.str());
    }
    if (!(scenario.mu >= 0.0) || !std::isfinite(scenario.mu)) {
        std::ostringstream msg;
        msg << "transmit threshold mu must be nonnegative and finite, got " << scenario.mu;
        throw validation_error(msg.str());
    }
}

DualityMap duality_map(double rate) {
    if (!(rate > 0.0) || !std::isfinite(rate)) {
        std::ostringstream msg;
        msg << "duality map requires a positive finite rate, got " << rate
            << " (rate 0 has no rate-outage event; use the positive-secrecy metric)";
        throw validation_error(msg.str());
    }
    DualityMap map;
    map.gamma = std::expm1(rate * M_LN2); // 2^rate - 1
    map.scale = 1.0 + 1.0 / map.gamma;    // 2^rate / (2^rate - 1)
    return map;
}

InterferenceScenario to_interference(const SecrecyScenario &scenario, double scale) {
    InterferenceScenario mapped;
    mapped.desired = scenario.desired;
    mapped.interferers.reserve(scenario.eavesdropper_branches.size());
    for (const FadingModel &branch : scenario.eavesdropper_branches) {
        mapped.interferers.emplace_back(branch, scale);
    }
    return mapped;
}

MetricValue p_s(const SecrecyScenario &scenario) {
    validate(scenario);
    const DualityMap map = duality_map(scenario.rate);
    return op_ni(to_interference(scenario, map.scale), map.gamma);
}

MetricValue p_s_plus(const SecrecyScenario &scenario) {
    validate(scenario);
    const MetricValue outage = op_i(to_interference(scenario, 1.0), 1.0);
    MetricValue out;
    out.value = 1.0 - outage.value;
    out.underflow = outage.underflow;
    return out;
}

MetricValue p_so(const SecrecyScenario &scenario) {
    validate(scenario);
    const DualityMap map = duality_map(scenario.rate);
    const double f_mu = scenario.mu > 0.0 ? cdf(scenario.desired, scenario.mu) : 0.0;
    if (1.0 - f_mu <= 0.0) {
        std::ostringstream msg;
        msg << "transmit threshold mu = " << scenario.mu
            << " silences the transmitter: the desired-link CDF reaches 1 there in double "
               "precision";
        throw degenerate_threshold(msg.str());
    }
    const MetricValue unconditional = p_s(scenario);
    MetricValue out;
    out.value = std::max(unconditional.value - f_mu, 0.0) / (1.0 - f_mu);
    out.underflow = unconditional.underflow;
    out.lower_bound = scenario.mu > map.gamma;
    return out;
}

} // namespace secout
