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

#ifndef SECOUT_CONFIG_HPP
#define SECOUT_CONFIG_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "secout/fading.hpp"
#include "secout/mc.hpp"
#include "secout/secrecy.hpp"

namespace secout {

/// One link as written in a config file: family, shape parameter, and
/// mean SNR still in dB.
struct LinkSpec {
    Family family = Family::Rayleigh;
    double m = 1.0;
    double rice_k = 0.0;
    double mean_snr_db = 0.0;
};

/// How the secrecy section specified the transmit threshold mu.
enum class MuSpec {
    zero,     // key absent or the literal "-inf": mu = 0, no conditioning
    rate_tied, // the literal "gamma": mu = 2^rate - 1, tracks rate sweeps
    decibel,  // numeric dB value
};

/**
 * A scenario as parsed from a config file, with dB values and symbolic
 * settings still unresolved so sweeps can rewrite fields before the
 * linear-domain scenario is built.
 */
struct ScenarioConfig {
    LinkSpec desired;
    std::vector<LinkSpec> branches;
    bool branches_uniform = true; // no per-branch override keys were used
    double rate_bits = 0.0;
    MuSpec mu_kind = MuSpec::zero;
    double mu_db = 0.0;
    McConfig mc;
};

/**
 * Parses the sectioned key = value format:
 *
 *   [desired]      model (rayleigh|nakagami|rice), m, K, mean_snr_db
 *   [eavesdropper] count, model, m, K, mean_snr_db, and per-branch
 *                  overrides via key.INDEX (1-based), e.g. mean_snr_db.2
 *   [secrecy]      rate_bits, mu_db (number, "gamma", or "-inf")
 *   [mc]           samples, seed, workers
 *
 * '#' starts a comment. Unknown sections or keys, duplicate keys, and
 * malformed values all raise validation_error with "path:line:" context;
 * missing required keys name the field, e.g. "desired.mean_snr_db".
 */
ScenarioConfig load_config(const std::string &path);

/// Same parser over an already-open stream; `origin` labels diagnostics.
ScenarioConfig parse_config(std::istream &in, const std::string &origin);

/// Resolves dB values and the mu rule into a linear-domain scenario.
SecrecyScenario make_scenario(const ScenarioConfig &config);

} // namespace secout

#endif // SECOUT_CONFIG_HPP
