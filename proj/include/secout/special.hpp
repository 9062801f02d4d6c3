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

#ifndef SECOUT_SPECIAL_HPP
#define SECOUT_SPECIAL_HPP

namespace secout {

/// log(n!) from a cached lgamma table.
double log_factorial(int n);

/// log of the binomial coefficient C(n, k), 0 <= k <= n.
double log_choose(int n, int k);

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double regularized_gamma_lower(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double regularized_gamma_upper(double a, double x);

/// First-order Marcum Q function Q1(a, b), a >= 0, b >= 0.
double marcum_q1(double a, double b);

/// 1 - Q1(a, b), evaluated as a direct nonnegative series (accurate when small).
double marcum_q1_complement(double a, double b);

} // namespace secout

#endif // SECOUT_SPECIAL_HPP
