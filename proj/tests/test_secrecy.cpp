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

#include <cmath>
#include <vector>

#include <doctest.h>

#include "secout/errors.hpp"
#include "secout/mc.hpp"
#include "secout/secrecy.hpp"
#include "support.hpp"

using namespace secout;
using secout::test::rayleigh_rayleigh_ps;
using secout::test::rel_diff;

namespace {

SecrecyScenario basic_scenario(double snr_d, double snr_e, double rate, double mu = 0.0) {
    SecrecyScenario scenario;
    scenario.desired = FadingModel::rayleigh(snr_d);
    scenario.eavesdropper_branches = {FadingModel::rayleigh(snr_e)};
    scenario.rate = rate;
    scenario.mu = mu;
    return scenario;
}

SecrecyScenario random_scenario(RandomStream &stream) {
    SecrecyScenario scenario;
    const int m = 1 + static_cast<int>(stream.next_uniform() * 5.0);
    scenario.desired = FadingModel::nakagami(static_cast<double>(m),
                                             0.5 + 20.0 * stream.next_uniform());
    const int branches = 1 + static_cast<int>(stream.next_uniform() * 8.0);
    for (int k = 0; k < branches; ++k) {
        const int family = static_cast<int>(stream.next_uniform() * 3.0);
        const double snr = 0.3 + 6.0 * stream.next_uniform();
        if (family == 0) {
            scenario.eavesdropper_branches.push_back(FadingModel::rayleigh(snr));
        } else if (family == 1) {
            scenario.eavesdropper_branches.push_back(
                FadingModel::nakagami(0.5 + 4.0 * stream.next_uniform(), snr));
        } else {
            scenario.eavesdropper_branches.push_back(
                FadingModel::rice(5.0 * stream.next_uniform(), snr));
        }
    }
    scenario.rate = 0.05 + 3.95 * stream.next_uniform();
    scenario.mu = 0.0;
    return scenario;
}

} // namespace

TEST_CASE("duality map pinned values and limits") {
    const DualityMap at_one = duality_map(1.0);
    CHECK(at_one.gamma == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(at_one.scale == doctest::Approx(2.0).epsilon(1e-14));
    const DualityMap at_two = duality_map(2.0);
    CHECK(at_two.gamma == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(at_two.scale == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(duality_map(40.0).scale == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(duality_map(0.0), validation_error);
    CHECK_THROWS_AS(duality_map(-0.5), validation_error);
}

TEST_CASE("rate outage matches the Rayleigh-Rayleigh closed form") {
    const double snr_e = std::pow(10.0, 0.5); // 5 dB
    const SecrecyScenario scenario = basic_scenario(10.0, snr_e, 1.0);
    const double expected = rayleigh_rayleigh_ps(10.0, snr_e, 1.0);
    const MetricValue got = p_s(scenario);
    CHECK(rel_diff(got.value, expected) < 1e-12);
    CHECK(got.value == doctest::Approx(0.44572).epsilon(1e-4));

    SUBCASE("over a grid of parameters") {
        for (double snr_d : {1.0, 5.0, 20.0}) {
            for (double snr : {0.5, 3.16227766017, 10.0}) {
                for (double rate : {0.25, 1.0, 2.0}) {
                    CHECK(rel_diff(p_s(basic_scenario(snr_d, snr, rate)).value,
                                   rayleigh_rayleigh_ps(snr_d, snr, rate)) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("a vanishing eavesdropper leaves only the noise outage") {
    SecrecyScenario scenario;
    scenario.desired = FadingModel::nakagami(2.0, 8.0);
    scenario.eavesdropper_branches = {FadingModel::rayleigh(1e-9)};
    scenario.rate = 1.5;
    const double gamma = std::exp2(1.5) - 1.0;
    CHECK(std::abs(p_s(scenario).value - op_n(scenario.desired, gamma)) < 1e-6);
}

TEST_CASE("secrecy metrics are the mapped interference metrics, bit for bit") {
    RandomStream stream(161803);
    for (int trial = 0; trial < 100; ++trial) {
        const SecrecyScenario scenario = random_scenario(stream);
        const DualityMap map = duality_map(scenario.rate);
        const MetricValue direct = p_s(scenario);
        const MetricValue mapped = op_ni(to_interference(scenario, map.scale), map.gamma);
        CHECK(direct.value == mapped.value);
        const MetricValue plus = p_s_plus(scenario);
        const MetricValue unscaled = op_i(to_interference(scenario, 1.0), 1.0);
        CHECK(plus.value == 1.0 - unscaled.value);
    }
}

TEST_CASE("positive secrecy probability oracles") {
    SUBCASE("identical links are a coin flip") {
        for (double snr : {0.5, 2.0, 25.0}) {
            CHECK(rel_diff(p_s_plus(basic_scenario(snr, snr, 1.0)).value, 0.5) < 1e-12);
        }
    }
    SUBCASE("Rayleigh pair") {
        CHECK(rel_diff(p_s_plus(basic_scenario(10.0, 5.0, 1.0)).value, 10.0 / 15.0) < 1e-12);
    }
    SUBCASE("Nakagami-2 desired link against a Rayleigh branch") {
        SecrecyScenario scenario;
        scenario.desired = FadingModel::nakagami(2.0, 10.0);
        scenario.eavesdropper_branches = {FadingModel::rayleigh(5.0)};
        scenario.rate = 1.0;
        CHECK(rel_diff(p_s_plus(scenario).value, 0.75) < 1e-12);
    }
}

TEST_CASE("conditional secrecy outage behavior in mu") {
    SUBCASE("mu zero reproduces the unconditional metric exactly") {
        RandomStream stream(55);
        for (int trial = 0; trial < 20; ++trial) {
            SecrecyScenario scenario = random_scenario(stream);
            scenario.mu = 0.0;
            const MetricValue conditional = p_so(scenario);
            CHECK(conditional.value == p_s(scenario).value);
            CHECK_FALSE(conditional.lower_bound);
        }
    }
    SUBCASE("conditioning never increases the outage") {
        RandomStream stream(56);
        for (int trial = 0; trial < 20; ++trial) {
            SecrecyScenario scenario = random_scenario(stream);
            scenario.mu = std::expm1(scenario.rate * M_LN2); // mu = gamma
            CHECK(p_so(scenario).value <= p_s(scenario).value + 1e-15);
        }
    }
    SUBCASE("mu above gamma carries the lower-bound flag") {
        SecrecyScenario scenario = basic_scenario(10.0, 2.0, 1.0, 2.5);
        CHECK(p_so(scenario).lower_bound);
        scenario.mu = 1.0; // equal to gamma: exact
        CHECK_FALSE(p_so(scenario).lower_bound);
        scenario.mu = 0.5;
        CHECK_FALSE(p_so(scenario).lower_bound);
    }
    SUBCASE("a silencing threshold is rejected") {
        SecrecyScenario scenario = basic_scenario(1.0, 1.0, 1.0, 1e9);
        CHECK_THROWS_AS(p_so(scenario), degenerate_threshold);
    }
}

TEST_CASE("conditional outage matches the Monte Carlo conditional estimator") {
    // Nakagami desired link, Rayleigh branches at 5 dB, rate 1, mu = gamma.
    const double snr_e = std::pow(10.0, 0.5);
    for (int branches : {1, 3}) {
        SecrecyScenario scenario;
        scenario.desired = FadingModel::nakagami(2.0, 10.0);
        scenario.eavesdropper_branches.assign(static_cast<std::size_t>(branches),
                                              FadingModel::rayleigh(snr_e));
        scenario.rate = 1.0;
        scenario.mu = 1.0; // equals 2^rate - 1
        McConfig cfg;
        cfg.samples = 10000000;
        cfg.seed = 23 + static_cast<std::uint64_t>(branches);
        const Estimate est = estimate(Metric::p_so, scenario, cfg);
        CHECK(std::abs(p_so(scenario).value - est.p_hat) <= 4.0 * est.std_err);
    }
}

TEST_CASE("tiny rates approach the complement of positive secrecy") {
    RandomStream stream(77);
    for (int trial = 0; trial < 15; ++trial) {
        SecrecyScenario scenario = random_scenario(stream);
        scenario.rate = 1e-6;
        CHECK(std::abs(p_s(scenario).value - (1.0 - p_s_plus(scenario).value)) < 1e-4);
    }
}

TEST_CASE("rate outage is monotone in every natural direction") {
    SUBCASE("nondecreasing in the rate") {
        double prev = -1.0;
        for (double rate = 0.1; rate <= 6.0; rate += 0.29) {
            const double value = p_s(basic_scenario(10.0, 3.0, rate)).value;
            CHECK(value >= prev - 1e-12);
            prev = value;
        }
    }
    SUBCASE("nondecreasing in the branch count") {
        SecrecyScenario scenario;
        scenario.desired = FadingModel::nakagami(3.0, 12.0);
        scenario.rate = 1.0;
        double prev = -1.0;
        for (int branches = 1; branches <= 8; ++branches) {
            scenario.eavesdropper_branches.assign(static_cast<std::size_t>(branches),
                                                  FadingModel::rayleigh(1.5));
            const double value = p_s(scenario).value;
            CHECK(value >= prev - 1e-12);
            prev = value;
        }
    }
    SUBCASE("nondecreasing in each branch mean SNR") {
        double prev = -1.0;
        for (double snr_e = 0.25; snr_e <= 32.0; snr_e *= 2.0) {
            const double value = p_s(basic_scenario(10.0, snr_e, 1.0)).value;
            CHECK(value >= prev - 1e-12);
            prev = value;
        }
    }
    SUBCASE("nonincreasing in the desired mean SNR") {
        double prev = 2.0;
        for (double snr_d = 0.25; snr_d <= 4096.0; snr_d *= 2.0) {
            const double value = p_s(basic_scenario(snr_d, 3.0, 1.0)).value;
            CHECK(value <= prev + 1e-12);
            prev = value;
        }
    }
}

TEST_CASE("MRC branches behave like explicitly summed interferers") {
    // The analytic path folds the branch sum through the MGF product; the
    // sampler sums per-branch draws explicitly. Agreement ties the two
    // readings of the combined eavesdropper SNR together.
    SecrecyScenario scenario;
    scenario.desired = FadingModel::rayleigh(12.0);
    scenario.eavesdropper_branches = {FadingModel::rayleigh(1.0),
                                      FadingModel::nakagami(2.0, 2.0),
                                      FadingModel::rice(1.0, 0.8)};
    scenario.rate = 1.0;
    McConfig cfg;
    cfg.samples = 2000000;
    cfg.seed = 3;
    const Estimate est = estimate(Metric::p_s, scenario, cfg);
    CHECK(std::abs(p_s(scenario).value - est.p_hat) <= 4.0 * est.std_err);
}

TEST_CASE("scenario validation and rate-zero handling") {
    SecrecyScenario scenario = basic_scenario(10.0, 5.0, 0.0);
    CHECK_THROWS_AS(p_s(scenario), validation_error);
    CHECK_THROWS_AS(p_so(scenario), validation_error);
    CHECK(p_s_plus(scenario).value == doctest::Approx(10.0 / 15.0).epsilon(1e-13));

    SecrecyScenario empty = basic_scenario(10.0, 5.0, 1.0);
    empty.eavesdropper_branches.clear();
    CHECK_THROWS_AS(p_s(empty), validation_error);

    SecrecyScenario negative_rate = basic_scenario(10.0, 5.0, 1.0);
    negative_rate.rate = -1.0;
    CHECK_THROWS_AS(p_s(negative_rate), validation_error);

    SecrecyScenario negative_mu = basic_scenario(10.0, 5.0, 1.0, 0.0);
    negative_mu.mu = -0.5;
    CHECK_THROWS_AS(p_so(negative_mu), validation_error);
}
