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

#ifndef SECOUT_ERRORS_HPP
#define SECOUT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace secout {

/// Invalid parameter or malformed input (bad shape factor, negative SNR, ...).
class validation_error : public std::invalid_argument {
  public:
    explicit validation_error(const std::string &msg) : std::invalid_argument(msg) {}
};

/// MGF evaluated at or beyond its abscissa of convergence.
class mgf_domain_error : public std::domain_error {
  public:
    explicit mgf_domain_error(const std::string &msg) : std::domain_error(msg) {}
};

/// Scenario outside the closed-form engine (e.g. non-integer desired-link shape);
/// the Monte Carlo path still applies.
class unsupported_configuration : public std::runtime_error {
  public:
    explicit unsupported_configuration(const std::string &msg) : std::runtime_error(msg) {}
};

/// Conditional Monte Carlo estimate with too few conditioning-event hits.
class insufficient_conditioning : public std::runtime_error {
  public:
    explicit insufficient_conditioning(const std::string &msg) : std::runtime_error(msg) {}
};

/// Conditioning threshold so large that the transmit probability vanishes.
class degenerate_threshold : public std::runtime_error {
  public:
    explicit degenerate_threshold(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace secout

#endif // SECOUT_ERRORS_HPP
