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

#ifndef SECOUT_OUTAGE_HPP
#define SECOUT_OUTAGE_HPP

#include <vector>

#include "secout/fading.hpp"

namespace secout {

/**
 * A receiver whose desired signal competes against aggregate interference
 * and unit-power noise. The desired link must be Rayleigh or Nakagami-m
 * with integer m for the closed-form path; interferer branches may follow
 * any supported family, optionally scaled by a constant.
 */
struct InterferenceScenario {
    FadingModel desired;
    std::vector<ScaledModel> interferers;
};

/**
 * A probability with provenance flags.
 *
 * underflow: the exact result (or the survival probability it is derived
 * from) fell below 1e-300, so the value saturated to 0 or 1.
 * lower_bound: the value bounds the true probability from below instead
 * of equalling it (only secrecy-side conditional metrics set this).
 */
struct MetricValue {
    double value = 0.0;
    bool underflow = false;
    bool lower_bound = false;
};

/// Noise-limited outage Pr{SNR_d < gamma}: the desired-link CDF at gamma.
double op_n(const FadingModel &desired, double gamma);

/**
 * Outage against interference plus unit noise,
 * Pr{SNR_d < gamma * (SNR_i + 1)} with SNR_i the sum over branches:
 *
 *   1 - exp(-p) sum_{i=0}^{m-1} (p^i / i!) sum_{j=0}^{i} C(i,j) T_j,
 *   p = m * gamma / mean_snr_d,
 *
 * where T_j are the tilted moments of the interference sum at tilt p.
 */
MetricValue op_ni(const InterferenceScenario &scenario, double gamma);

/**
 * Interference-limited outage Pr{SNR_d < gamma * SNR_i}:
 *
 *   1 - sum_{i=0}^{m-1} (p^i / i!) T_i,   p = m * gamma / mean_snr_d.
 *
 * The derivation of this form is worked through in docs/formulas.md.
 */
MetricValue op_i(const InterferenceScenario &scenario, double gamma);

/// Integer Nakagami shape of the desired link (1 for Rayleigh).
/// Throws unsupported_configuration when the closed-form path cannot
/// serve the model (Rice, or non-integer m).
int analytic_desired_shape(const FadingModel &desired);

} // namespace secout

#endif // SECOUT_OUTAGE_HPP
