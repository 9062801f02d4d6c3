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

#ifndef SECOUT_MGF_PRODUCT_HPP
#define SECOUT_MGF_PRODUCT_HPP

#include <vector>

#include "secout/fading.hpp"
#include "secout/signed_log.hpp"

namespace secout {

/**
 * Exponentially tilted moments of a nonnegative variable X at tilt p > 0:
 *
 *   terms[j] = T_j = E[X^j exp(-p X)],   j = 0..order.
 *
 * T_j equals the jth derivative of the MGF evaluated at -p, so every
 * entry is nonnegative and T_0 = MGF(-p) lies in (0, 1]. Working with
 * T_j instead of the signed derivatives of p -> MGF(-p) keeps every
 * downstream summand nonnegative, so sums of them never cancel.
 */
struct TiltedMomentSeries {
    double p = 0.0;
    std::vector<SignedLog> terms;

    int order() const { return static_cast<int>(terms.size()) - 1; }
};

/**
 * Tilted moments T_0..T_n of a single fading variable, from the
 * closed-form MGF derivatives. Plain FadingModel arguments convert
 * implicitly (scale 1).
 */
TiltedMomentSeries factor_series(const ScaledModel &model, double p, int n);

/**
 * Tilted moments of the sum X = sum_k X_k of independent variables,
 * each given by its own series at the same tilt p. Pairwise binomial
 * convolution: result[j] = sum_{a+b=j} C(j,a) A[a] B[b].
 *
 * Throws validation_error if the list is empty, the evaluation points
 * differ, or any factor carries fewer than n+1 terms.
 */
TiltedMomentSeries product_series(const std::vector<TiltedMomentSeries> &factors, int n);

} // namespace secout

#endif // SECOUT_MGF_PRODUCT_HPP
