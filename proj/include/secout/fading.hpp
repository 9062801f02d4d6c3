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

#ifndef SECOUT_FADING_HPP
#define SECOUT_FADING_HPP

#include "secout/random.hpp"
#include "secout/signed_log.hpp"

namespace secout {

enum class Family { Rayleigh, NakagamiM, Rice };

const char *family_name(Family family);

/**
 * One link's fading law: family, shape parameter, and mean SNR.
 *
 * mean_snr is a linear power ratio; dB conversion belongs to the CLI
 * boundary. The Nakagami shape m applies to NakagamiM only (any real
 * m >= 0.5 here; the closed-form outage engine separately insists on
 * integer m for the desired link). rice_k applies to Rice only.
 */
struct FadingModel {
    Family family = Family::Rayleigh;
    double mean_snr = 1.0;
    double m = 1.0;
    double rice_k = 0.0;

    static FadingModel rayleigh(double mean_snr) { return {Family::Rayleigh, mean_snr, 1.0, 0.0}; }
    static FadingModel nakagami(double m, double mean_snr) {
        return {Family::NakagamiM, mean_snr, m, 0.0};
    }
    static FadingModel rice(double k_factor, double mean_snr) {
        return {Family::Rice, mean_snr, 1.0, k_factor};
    }
};

/// Cap on the derivative order served by mgf_derivative and the series layer.
inline constexpr int max_derivative_order = 128;

/// Throws validation_error if the model parameters are out of range.
void validate(const FadingModel &model);

/// Supremum of s for which the MGF converges: 1/snr (Rayleigh),
/// m/snr (NakagamiM), (1+K)/snr (Rice).
double mgf_s_max(const FadingModel &model);

/// E[exp(s X)] in closed form; requires s < mgf_s_max(model).
double mgf(const FadingModel &model, double s);

/// nth derivative of the MGF at s, as a plain double.
/// Throws std::overflow_error if the value exceeds double range.
double mgf_derivative(const FadingModel &model, int n, double s);

/// nth derivative of the MGF at s in signed-log form (never overflows).
SignedLog mgf_derivative_log(const FadingModel &model, int n, double s);

/// Pr{X <= x}. Regularized lower incomplete gamma for NakagamiM,
/// first-order Marcum Q for Rice.
double cdf(const FadingModel &model, double x);

/// One SNR draw; a deterministic function of the stream state.
double sample(const FadingModel &model, RandomStream &stream);

/**
 * A fading variable multiplied by a positive constant c.
 *
 * MGF of cX at s is the base MGF at c*s; the nth derivative picks up a
 * factor c^n. Plain models convert implicitly with scale 1.
 */
struct ScaledModel {
    FadingModel base;
    double scale = 1.0;

    ScaledModel(FadingModel base_model, double scale_factor = 1.0)
        : base(base_model), scale(scale_factor) {}
};

void validate(const ScaledModel &model);
double mgf_s_max(const ScaledModel &model);
double mgf(const ScaledModel &model, double s);
double mgf_derivative(const ScaledModel &model, int n, double s);
SignedLog mgf_derivative_log(const ScaledModel &model, int n, double s);
double sample(const ScaledModel &model, RandomStream &stream);

} // namespace secout

#endif // SECOUT_FADING_HPP
