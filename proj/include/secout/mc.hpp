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

#ifndef SECOUT_MC_HPP
#define SECOUT_MC_HPP

#include <cstdint>
#include <vector>

#include "secout/outage.hpp"
#include "secout/secrecy.hpp"

namespace secout {

enum class Metric { op_n, op_i, op_ni, p_s, p_so, p_s_plus };

const char *metric_name(Metric metric);

/**
 * Estimator settings. Results are a function of (seed, samples, scenario)
 * only: every sample draws from its own counter-derived substream and the
 * indicator counts are integer sums, so the worker count and scheduling
 * cannot change the outcome. workers = 0 means one thread per hardware
 * core.
 */
struct McConfig {
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 1;
    int workers = 0;
};

/**
 * Indicator-mean estimate. n_effective is the number of samples the mean
 * is taken over: the full sample count, except for the conditional
 * secrecy metric where it is the number of conditioning-event hits.
 */
struct Estimate {
    double p_hat = 0.0;
    double std_err = 0.0;
    std::uint64_t n_effective = 0;
};

/// Event counts over one batch of secrecy-scenario samples.
struct SecrecyCounts {
    std::uint64_t rate_outage = 0;         // desired < 2^rate (1 + eve) - 1
    std::uint64_t positive_secrecy = 0;    // desired > eve
    std::uint64_t transmitting = 0;        // desired > mu
    std::uint64_t conditional_outage = 0;  // transmitting and rate_outage
};

/// Event counts over one batch of interference-scenario samples.
struct InterferenceCounts {
    std::uint64_t noise_outage = 0;         // desired < gamma
    std::uint64_t interference_outage = 0;  // desired < gamma * interference
    std::uint64_t combined_outage = 0;      // desired < gamma * (interference + 1)
};

/// Raw event counts for all secrecy metrics at once. Each sample draws
/// the desired SNR first, then every eavesdropper branch in declaration
/// order, and sums the branches (MRC).
SecrecyCounts secrecy_counts(const SecrecyScenario &scenario, const McConfig &cfg);

/// Raw event counts for all interference metrics at once; same draw
/// order discipline as secrecy_counts.
InterferenceCounts interference_counts(const InterferenceScenario &scenario, double gamma,
                                       const McConfig &cfg);

/// Estimate of one secrecy metric (p_s, p_so, p_s_plus) from the defining
/// event, with no duality mapping. Throws insufficient_conditioning when
/// the p_so conditioning event is hit fewer than 100 times.
Estimate estimate(Metric metric, const SecrecyScenario &scenario, const McConfig &cfg);

/**
 * All three secrecy estimates from one shared batch of samples (one
 * sampling pass instead of three). p_so_valid is false, instead of an
 * exception, when the conditioning event was hit fewer than 100 times.
 */
struct SecrecyEstimates {
    Estimate p_s;
    Estimate p_s_plus;
    Estimate p_so;
    bool p_so_valid = false;
};

SecrecyEstimates estimate_secrecy(const SecrecyScenario &scenario, const McConfig &cfg);

/// Estimate of one interference metric (op_n, op_i, op_ni) at threshold
/// gamma from the defining event.
Estimate estimate(Metric metric, const InterferenceScenario &scenario, double gamma,
                  const McConfig &cfg);

enum class CheckStatus { pass, fail, inconclusive };

const char *check_status_name(CheckStatus status);

/**
 * One analytic-versus-sampled comparison. sigma_distance is
 * |analytic - p_hat| / std_err for two-sided rows; for lower-bound rows
 * (conditional secrecy with mu above the rate threshold) it is the
 * one-sided excess max(0, analytic - p_hat) / std_err.
 */
struct VerificationRow {
    Metric metric = Metric::p_s;
    double analytic = 0.0;
    bool analytic_is_lower_bound = false;
    Estimate mc;
    double sigma_distance = 0.0;
    CheckStatus status = CheckStatus::pass;
};

struct VerificationReport {
    std::vector<VerificationRow> rows;

    /// True when no row failed (inconclusive rows do not fail).
    bool all_pass() const;
};

/**
 * Judges one analytic value against one estimate at k_sigma standard
 * errors; the per-metric building block of verify(). Values whose
 * analytic probability p satisfies min(p, 1-p) * n_effective < 25 are
 * beneath the estimator's resolution and come back inconclusive.
 */
VerificationRow compare_estimate(Metric metric, double analytic, bool analytic_is_lower_bound,
                                 const Estimate &mc, double k_sigma);

/**
 * Runs the analytic and Monte Carlo routes for each requested metric and
 * compares them at k_sigma standard errors. Rows whose analytic value p
 * satisfies min(p, 1-p) * samples < 25 are below the estimator's
 * resolution and reported inconclusive rather than judged.
 */
VerificationReport verify(const SecrecyScenario &scenario, const std::vector<Metric> &metrics,
                          const McConfig &cfg, double k_sigma);

} // namespace secout

#endif // SECOUT_MC_HPP
