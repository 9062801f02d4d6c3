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

#include "secout/mgf_product.hpp"

#include <cmath>
#include <sstream>

#include "secout/errors.hpp"
#include "secout/special.hpp"

namespace secout {

namespace {

void check_tilt(double p) {
    if (!(p > 0.0) || !std::isfinite(p)) {
        std::ostringstream msg;
        msg << "tilt parameter must be positive and finite, got " << p;
        throw validation_error(msg.str());
    }
}

void check_order(int n) {
    if (n < 0 || n > max_derivative_order) {
        std::ostringstream msg;
        msg << "series order must be in [0, " << max_derivative_order << "], got " << n;
        throw validation_error(msg.str());
    }
}

/// result[j] = sum_{a=0}^{j} C(j,a) a_terms[a] b_terms[j-a]
std::vector<SignedLog> binomial_convolve(const std::vector<SignedLog> &a_terms,
                                         const std::vector<SignedLog> &b_terms, int n) {
    std::vector<SignedLog> result(static_cast<std::size_t>(n) + 1, SignedLog::zero());
    for (int j = 0; j <= n; ++j) {
        SignedLog acc = SignedLog::zero();
        for (int a = 0; a <= j; ++a) {
            acc += SignedLog::from_log(log_choose(j, a)) * a_terms[static_cast<std::size_t>(a)] *
                   b_terms[static_cast<std::size_t>(j - a)];
        }
        result[static_cast<std::size_t>(j)] = acc;
    }
    return result;
}

} // namespace

TiltedMomentSeries factor_series(const ScaledModel &model, double p, int n) {
    check_tilt(p);
    check_order(n);
    TiltedMomentSeries series;
    series.p = p;
    series.terms.reserve(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        // E[X^j exp(-pX)] is the jth MGF derivative at -p, which is
        // positive throughout the convergence region.
        series.terms.push_back(mgf_derivative_log(model, j, -p));
    }
    return series;
}

TiltedMomentSeries product_series(const std::vector<TiltedMomentSeries> &factors, int n) {
    check_order(n);
    if (factors.empty()) {
        throw validation_error("product_series requires at least one factor");
    }
    const double p = factors.front().p;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (factors[k].p != p) {
            std::ostringstream msg;
            msg << "factor " << k << " is evaluated at tilt " << factors[k].p
                << " but factor 0 at " << p << "; all factors must share one tilt";
            throw validation_error(msg.str());
        }
        if (factors[k].order() < n) {
            std::ostringstream msg;
            msg << "factor " << k << " carries " << factors[k].terms.size()
                << " terms but order " << n << " needs " << (n + 1);
            throw validation_error(msg.str());
        }
    }

    std::vector<SignedLog> acc(factors.front().terms.begin(),
                               factors.front().terms.begin() + n + 1);
    for (std::size_t k = 1; k < factors.size(); ++k) {
        acc = binomial_convolve(acc, factors[k].terms, n);
    }

    TiltedMomentSeries series;
    series.p = p;
    series.terms = std::move(acc);
    return series;
}

} // namespace secout
