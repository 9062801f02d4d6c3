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

#ifndef SECOUT_SECRECY_HPP
#define SECOUT_SECRECY_HPP

#include <vector>

#include "secout/fading.hpp"
#include "secout/outage.hpp"

namespace secout {

/**
 * A legitimate link observed by an eavesdropper with L_e MRC branches.
 * The eavesdropper's post-combining SNR is the sum of the per-branch
 * SNRs. rate is the target secrecy rate R_s in bits per channel use;
 * mu is the linear desired-SNR threshold below which the transmitter
 * stays silent (the conditioning event of the conditional metric).
 */
struct SecrecyScenario {
    FadingModel desired;
    std::vector<FadingModel> eavesdropper_branches;
    double rate = 1.0;
    double mu = 0.0;
};

void validate(const SecrecyScenario &scenario);

/**
 * The change of variables that turns the secrecy-rate outage event into
 * an interference outage event: threshold gamma = 2^rate - 1 and branch
 * scale factor c = 2^rate / (2^rate - 1).
 */
struct DualityMap {
    double gamma = 0.0;
    double scale = 0.0;
};

/// Throws validation_error for rate <= 0 (use p_s_plus for rate 0).
DualityMap duality_map(double rate);

/// The interference scenario whose outage matches the secrecy event:
/// each eavesdropper branch scaled by the given factor.
InterferenceScenario to_interference(const SecrecyScenario &scenario, double scale);

/**
 * Secrecy outage probability Pr{C_s < rate}: the probability that the
 * channel cannot sustain secrecy rate R_s. Computed as op_ni on the
 * mapped scenario at threshold gamma, and equal to it bit for bit.
 */
MetricValue p_s(const SecrecyScenario &scenario);

/**
 * Probability of strictly positive secrecy capacity Pr{C_s > 0}:
 * 1 - op_i on the unscaled branches at threshold 1. rate and mu are
 * not consulted.
 */
MetricValue p_s_plus(const SecrecyScenario &scenario);

/**
 * Secrecy outage probability conditioned on transmission actually
 * happening (desired SNR above mu):
 *
 *   [p_s - F_d(mu)]^+ / (1 - F_d(mu)).
 *
 * Exact for mu <= gamma; for mu > gamma this expression bounds the true
 * conditional probability from below and the result carries the
 * lower_bound flag. Throws degenerate_threshold when F_d(mu) reaches 1
 * in double precision.
 */
MetricValue p_so(const SecrecyScenario &scenario);

} // namespace secout

#endif // SECOUT_SECRECY_HPP
