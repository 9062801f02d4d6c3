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

#include "secout/fading.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "secout/errors.hpp"
#include "secout/special.hpp"

namespace secout {

const char *family_name(Family family) {
    switch (family) {
    case Family::Rayleigh:
        return "rayleigh";
    case Family::NakagamiM:
        return "nakagami";
    case Family::Rice:
        return "rice";
    }
    return "unknown";
}

void validate(const FadingModel &model) {
    if (!(model.mean_snr > 0.0) || !std::isfinite(model.mean_snr)) {
        std::ostringstream msg;
        msg << "mean SNR must be positive and finite, got " << model.mean_snr;
        throw validation_error(msg.str());
    }
    if (model.family == Family::NakagamiM) {
        if (!(model.m >= 0.5) || !std::isfinite(model.m)) {
            std::ostringstream msg;
            msg << "Nakagami shape m must satisfy m >= 0.5, got " << model.m;
            throw validation_error(msg.str());
        }
    }
    if (model.family == Family::Rice) {
        if (!(model.rice_k >= 0.0) || !std::isfinite(model.rice_k)) {
            std::ostringstream msg;
            msg << "Rice K factor must be nonnegative and finite, got " << model.rice_k;
            throw validation_error(msg.str());
        }
    }
}

double mgf_s_max(const FadingModel &model) {
    switch (model.family) {
    case Family::Rayleigh:
        return 1.0 / model.mean_snr;
    case Family::NakagamiM:
        return model.m / model.mean_snr;
    case Family::Rice:
        return (1.0 + model.rice_k) / model.mean_snr;
    }
    return 0.0;
}

namespace {

void check_mgf_domain(const FadingModel &model, double s) {
    const double s_max = mgf_s_max(model);
    if (!(s < s_max)) {
        std::ostringstream msg;
        msg << "MGF of " << family_name(model.family) << " model diverges for s >= " << s_max
            << ", got s = " << s;
        throw mgf_domain_error(msg.str());
    }
}

void check_derivative_order(int n) {
    if (n < 0 || n > max_derivative_order) {
        std::ostringstream msg;
        msg << "derivative order must be in [0, " << max_derivative_order << "], got " << n;
        throw validation_error(msg.str());
    }
}

/**
 * Log of the nth MGF derivative; the value is positive for every s in
 * the convergence region, so only the magnitude is tracked.
 *
 * Rayleigh:  snr^n n! (1 - s snr)^-(n+1)
 * Nakagami:  snr^n m^m Gamma(m+n) / (Gamma(m) (m - s snr)^(n+m))
 * Rice:      snr^n (n!)^2 (1+K) (1+K-s snr)^-(n+1) exp(s K snr / (1+K-s snr))
 *              * sum_{i=0}^{n} (K(1+K)/(1+K-s snr))^i / ((i!)^2 (n-i)!)
 */
double log_mgf_derivative(const FadingModel &model, int n, double s) {
    const double snr = model.mean_snr;
    switch (model.family) {
    case Family::Rayleigh:
        return n * std::log(snr) + log_factorial(n) - (n + 1) * std::log1p(-s * snr);
    case Family::NakagamiM: {
        const double m = model.m;
        return n * std::log(snr) + m * std::log(m) + std::lgamma(m + n) - std::lgamma(m) -
               (n + m) * std::log(m - s * snr);
    }
    case Family::Rice: {
        const double k = model.rice_k;
        const double denom = 1.0 + k - s * snr;
        double log_sum = -log_factorial(n); // i = 0 term of the inner sum
        if (k > 0.0 && n > 0) {
            const double log_ratio = std::log(k) + std::log1p(k) - std::log(denom);
            for (int i = 1; i <= n; ++i) {
                const double term =
                    i * log_ratio - 2.0 * log_factorial(i) - log_factorial(n - i);
                const double hi = std::max(log_sum, term);
                const double lo = std::min(log_sum, term);
                log_sum = hi + std::log1p(std::exp(lo - hi));
            }
        }
        return n * std::log(snr) + 2.0 * log_factorial(n) + std::log1p(k) -
               (n + 1) * std::log(denom) + s * k * snr / denom + log_sum;
    }
    }
    return -std::numeric_limits<double>::infinity();
}

} // namespace

double mgf(const FadingModel &model, double s) {
    validate(model);
    check_mgf_domain(model, s);
    const double snr = model.mean_snr;
    switch (model.family) {
    case Family::Rayleigh:
        return 1.0 / (1.0 - s * snr);
    case Family::NakagamiM:
        return std::pow(1.0 - s * snr / model.m, -model.m);
    case Family::Rice: {
        const double k = model.rice_k;
        const double denom = 1.0 + k - s * snr;
        return (1.0 + k) / denom * std::exp(s * k * snr / denom);
    }
    }
    return 0.0;
}

SignedLog mgf_derivative_log(const FadingModel &model, int n, double s) {
    validate(model);
    check_derivative_order(n);
    check_mgf_domain(model, s);
    if (n == 0) {
        return SignedLog::from_value(mgf(model, s));
    }
    return SignedLog::from_log(log_mgf_derivative(model, n, s));
}

double mgf_derivative(const FadingModel &model, int n, double s) {
    if (n == 0) {
        // bypass the log-space round trip so the zeroth derivative is the
        // MGF bit for bit
        check_derivative_order(n);
        return mgf(model, s);
    }
    return mgf_derivative_log(model, n, s).value();
}

double cdf(const FadingModel &model, double x) {
    validate(model);
    if (x < 0.0 || !std::isfinite(x)) {
        std::ostringstream msg;
        msg << "CDF argument must be nonnegative and finite, got " << x;
        throw validation_error(msg.str());
    }
    if (x == 0.0) {
        return 0.0;
    }
    const double snr = model.mean_snr;
    switch (model.family) {
    case Family::Rayleigh:
        return -std::expm1(-x / snr);
    case Family::NakagamiM:
        return regularized_gamma_lower(model.m, model.m * x / snr);
    case Family::Rice: {
        const double k = model.rice_k;
        const double a = std::sqrt(2.0 * k);
        const double b = std::sqrt(2.0 * (1.0 + k) * x / snr);
        return marcum_q1_complement(a, b);
    }
    }
    return 0.0;
}

namespace {

/// Gamma(shape, 1) variate for shape >= 1 (Marsaglia-Tsang squeeze method).
double gamma_variate_shape_ge1(double shape, RandomStream &stream) {
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = stream.next_normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = stream.next_uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) {
            return d * v;
        }
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
            return d * v;
        }
    }
}

double gamma_variate(double shape, RandomStream &stream) {
    if (shape >= 1.0) {
        return gamma_variate_shape_ge1(shape, stream);
    }
    // Boost a shape+1 draw down: if G ~ Gamma(shape+1) and U ~ U(0,1),
    // then G * U^(1/shape) ~ Gamma(shape).
    const double g = gamma_variate_shape_ge1(shape + 1.0, stream);
    const double u = stream.next_uniform();
    return g * std::pow(u, 1.0 / shape);
}

} // namespace

double sample(const FadingModel &model, RandomStream &stream) {
    const double snr = model.mean_snr;
    switch (model.family) {
    case Family::Rayleigh:
        return snr * stream.next_exponential();
    case Family::NakagamiM:
        return (snr / model.m) * gamma_variate(model.m, stream);
    case Family::Rice: {
        const double k = model.rice_k;
        const double los = std::sqrt(k / (1.0 + k));
        const double sigma = std::sqrt(0.5 / (1.0 + k));
        const double in_phase = los + sigma * stream.next_normal();
        const double quadrature = sigma * stream.next_normal();
        return snr * (in_phase * in_phase + quadrature * quadrature);
    }
    }
    return 0.0;
}

void validate(const ScaledModel &model) {
    validate(model.base);
    if (!(model.scale > 0.0) || !std::isfinite(model.scale)) {
        std::ostringstream msg;
        msg << "scale factor must be positive and finite, got " << model.scale;
        throw validation_error(msg.str());
    }
}

double mgf_s_max(const ScaledModel &model) { return mgf_s_max(model.base) / model.scale; }

double mgf(const ScaledModel &model, double s) {
    validate(model);
    return mgf(model.base, model.scale * s);
}

SignedLog mgf_derivative_log(const ScaledModel &model, int n, double s) {
    validate(model);
    check_derivative_order(n);
    const SignedLog base = mgf_derivative_log(model.base, n, model.scale * s);
    if (n == 0) {
        return base;
    }
    return SignedLog::from_log(n * std::log(model.scale)) * base;
}

double mgf_derivative(const ScaledModel &model, int n, double s) {
    if (n == 0) {
        check_derivative_order(n);
        return mgf(model, s);
    }
    return mgf_derivative_log(model, n, s).value();
}

double sample(const ScaledModel &model, RandomStream &stream) {
    return model.scale * sample(model.base, stream);
}

} // namespace secout
