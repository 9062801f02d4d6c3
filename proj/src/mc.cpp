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

#include "secout/mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "secout/errors.hpp"

namespace secout {

const char *metric_name(Metric metric) {
    switch (metric) {
    case Metric::op_n:
        return "op_n";
    case Metric::op_i:
        return "op_i";
    case Metric::op_ni:
        return "op_ni";
    case Metric::p_s:
        return "p_s";
    case Metric::p_so:
        return "p_so";
    case Metric::p_s_plus:
        return "p_s_plus";
    }
    return "unknown";
}

const char *check_status_name(CheckStatus status) {
    switch (status) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::inconclusive:
        return "inconclusive";
    }
    return "unknown";
}

namespace {

constexpr std::uint64_t block_size = 1u << 16;
constexpr std::uint64_t min_conditioning_hits = 100;

void check_config(const McConfig &cfg) {
    if (cfg.samples < 1) {
        throw validation_error("Monte Carlo sample count must be at least 1");
    }
    if (cfg.workers < 0) {
        std::ostringstream msg;
        msg << "worker count must be nonnegative (0 = auto), got " << cfg.workers;
        throw validation_error(msg.str());
    }
}

int resolve_workers(int workers) {
    if (workers > 0) {
        return workers;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/**
 * Runs body(begin, end) over consecutive sample-index blocks handed out
 * by an atomic dispenser. The per-block results are merged with the
 * caller's combine(partial); because every count is an integer sum of
 * per-index indicators, any block-to-thread assignment yields the same
 * totals.
 */
template <typename Counts, typename Body>
Counts parallel_reduce(std::uint64_t samples, int workers, Body &&body) {
    const int threads = resolve_workers(workers);
    std::atomic<std::uint64_t> next_block{0};
    std::mutex merge_mutex;
    Counts total;

    auto worker = [&]() {
        Counts local;
        for (;;) {
            const std::uint64_t block = next_block.fetch_add(1);
            const std::uint64_t begin = block * block_size;
            if (begin >= samples) {
                break;
            }
            const std::uint64_t end = std::min(samples, begin + block_size);
            body(begin, end, local);
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        total.merge(local);
    };

    if (threads == 1) {
        worker();
        return total;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    for (std::thread &t : pool) {
        t.join();
    }
    return total;
}

struct SecrecyAccumulator : SecrecyCounts {
    void merge(const SecrecyAccumulator &other) {
        rate_outage += other.rate_outage;
        positive_secrecy += other.positive_secrecy;
        transmitting += other.transmitting;
        conditional_outage += other.conditional_outage;
    }
};

struct InterferenceAccumulator : InterferenceCounts {
    void merge(const InterferenceAccumulator &other) {
        noise_outage += other.noise_outage;
        interference_outage += other.interference_outage;
        combined_outage += other.combined_outage;
    }
};

Estimate indicator_estimate(std::uint64_t hits, std::uint64_t n) {
    Estimate est;
    est.n_effective = n;
    est.p_hat = static_cast<double>(hits) / static_cast<double>(n);
    est.std_err = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(n));
    return est;
}

} // namespace

SecrecyCounts secrecy_counts(const SecrecyScenario &scenario, const McConfig &cfg) {
    validate(scenario);
    check_config(cfg);
    const double rate_factor = std::exp2(scenario.rate);
    const double mu = scenario.mu;

    auto body = [&](std::uint64_t begin, std::uint64_t end, SecrecyAccumulator &local) {
        for (std::uint64_t i = begin; i < end; ++i) {
            RandomStream stream = RandomStream::for_sample(cfg.seed, i);
            const double snr_d = sample(scenario.desired, stream);
            double snr_e = 0.0;
            for (const FadingModel &branch : scenario.eavesdropper_branches) {
                snr_e += sample(branch, stream);
            }
            const bool outage = snr_d < rate_factor * (1.0 + snr_e) - 1.0;
            const bool tx = snr_d > mu;
            local.rate_outage += outage ? 1 : 0;
            local.positive_secrecy += snr_d > snr_e ? 1 : 0;
            local.transmitting += tx ? 1 : 0;
            local.conditional_outage += (tx && outage) ? 1 : 0;
        }
    };
    return parallel_reduce<SecrecyAccumulator>(cfg.samples, cfg.workers, body);
}

InterferenceCounts interference_counts(const InterferenceScenario &scenario, double gamma,
                                       const McConfig &cfg) {
    validate(scenario.desired);
    if (scenario.interferers.empty()) {
        throw validation_error("interference scenario needs at least one interferer branch");
    }
    for (const ScaledModel &branch : scenario.interferers) {
        validate(branch);
    }
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        std::ostringstream msg;
        msg << "outage threshold must be positive and finite, got " << gamma;
        throw validation_error(msg.str());
    }
    check_config(cfg);

    auto body = [&](std::uint64_t begin, std::uint64_t end, InterferenceAccumulator &local) {
        for (std::uint64_t i = begin; i < end; ++i) {
            RandomStream stream = RandomStream::for_sample(cfg.seed, i);
            const double snr_d = sample(scenario.desired, stream);
            double snr_i = 0.0;
            for (const ScaledModel &branch : scenario.interferers) {
                snr_i += sample(branch, stream);
            }
            local.noise_outage += snr_d < gamma ? 1 : 0;
            local.interference_outage += snr_d < gamma * snr_i ? 1 : 0;
            local.combined_outage += snr_d < gamma * (snr_i + 1.0) ? 1 : 0;
        }
    };
    return parallel_reduce<InterferenceAccumulator>(cfg.samples, cfg.workers, body);
}

SecrecyEstimates estimate_secrecy(const SecrecyScenario &scenario, const McConfig &cfg) {
    const SecrecyCounts counts = secrecy_counts(scenario, cfg);
    SecrecyEstimates out;
    out.p_s = indicator_estimate(counts.rate_outage, cfg.samples);
    out.p_s_plus = indicator_estimate(counts.positive_secrecy, cfg.samples);
    if (counts.transmitting >= min_conditioning_hits) {
        out.p_so = indicator_estimate(counts.conditional_outage, counts.transmitting);
        out.p_so_valid = true;
    }
    return out;
}

Estimate estimate(Metric metric, const SecrecyScenario &scenario, const McConfig &cfg) {
    const SecrecyEstimates all = estimate_secrecy(scenario, cfg);
    switch (metric) {
    case Metric::p_s:
        return all.p_s;
    case Metric::p_s_plus:
        return all.p_s_plus;
    case Metric::p_so: {
        if (!all.p_so_valid) {
            std::ostringstream msg;
            msg << "conditioning event (desired SNR above mu = " << scenario.mu
                << ") was hit too rarely in " << cfg.samples << " samples; at least "
                << min_conditioning_hits << " hits are needed for a conditional estimate";
            throw insufficient_conditioning(msg.str());
        }
        return all.p_so;
    }
    default:
        break;
    }
    std::ostringstream msg;
    msg << "metric " << metric_name(metric)
        << " is an interference-side metric; pass an interference scenario and threshold";
    throw validation_error(msg.str());
}

Estimate estimate(Metric metric, const InterferenceScenario &scenario, double gamma,
                  const McConfig &cfg) {
    const InterferenceCounts counts = interference_counts(scenario, gamma, cfg);
    switch (metric) {
    case Metric::op_n:
        return indicator_estimate(counts.noise_outage, cfg.samples);
    case Metric::op_i:
        return indicator_estimate(counts.interference_outage, cfg.samples);
    case Metric::op_ni:
        return indicator_estimate(counts.combined_outage, cfg.samples);
    default:
        break;
    }
    std::ostringstream msg;
    msg << "metric " << metric_name(metric)
        << " is a secrecy-side metric; pass a secrecy scenario";
    throw validation_error(msg.str());
}

bool VerificationReport::all_pass() const {
    for (const VerificationRow &row : rows) {
        if (row.status == CheckStatus::fail) {
            return false;
        }
    }
    return true;
}

VerificationRow compare_estimate(Metric metric, double analytic, bool analytic_is_lower_bound,
                                 const Estimate &mc, double k_sigma) {
    if (!(k_sigma > 0.0) || !std::isfinite(k_sigma)) {
        std::ostringstream msg;
        msg << "k_sigma must be positive and finite, got " << k_sigma;
        throw validation_error(msg.str());
    }
    VerificationRow row;
    row.metric = metric;
    row.analytic = analytic;
    row.analytic_is_lower_bound = analytic_is_lower_bound;
    row.mc = mc;

    const double n = static_cast<double>(mc.n_effective);
    if (std::min(analytic, 1.0 - analytic) * n < 25.0) {
        row.status = CheckStatus::inconclusive;
        row.sigma_distance = 0.0;
        return row;
    }
    const double delta = analytic_is_lower_bound ? std::max(0.0, analytic - mc.p_hat)
                                                 : std::abs(analytic - mc.p_hat);
    row.sigma_distance = mc.std_err > 0.0
                             ? delta / mc.std_err
                             : (delta == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    row.status = row.sigma_distance <= k_sigma ? CheckStatus::pass : CheckStatus::fail;
    return row;
}

VerificationReport verify(const SecrecyScenario &scenario, const std::vector<Metric> &metrics,
                          const McConfig &cfg, double k_sigma) {
    if (!(k_sigma > 0.0) || !std::isfinite(k_sigma)) {
        std::ostringstream msg;
        msg << "k_sigma must be positive and finite, got " << k_sigma;
        throw validation_error(msg.str());
    }
    for (Metric metric : metrics) {
        if (metric != Metric::p_s && metric != Metric::p_so && metric != Metric::p_s_plus) {
            std::ostringstream msg;
            msg << "verify compares secrecy metrics only, got " << metric_name(metric);
            throw validation_error(msg.str());
        }
    }
    const SecrecyEstimates sampled = estimate_secrecy(scenario, cfg);

    VerificationReport report;
    report.rows.reserve(metrics.size());
    for (Metric metric : metrics) {
        MetricValue analytic;
        Estimate mc;
        switch (metric) {
        case Metric::p_s:
            analytic = p_s(scenario);
            mc = sampled.p_s;
            break;
        case Metric::p_so:
            analytic = p_so(scenario);
            if (!sampled.p_so_valid) {
                std::ostringstream msg;
                msg << "conditioning event (desired SNR above mu = " << scenario.mu
                    << ") was hit too rarely in " << cfg.samples
                    << " samples; at least 100 hits are needed for a conditional estimate";
                throw insufficient_conditioning(msg.str());
            }
            mc = sampled.p_so;
            break;
        default:
            analytic = p_s_plus(scenario);
            mc = sampled.p_s_plus;
            break;
        }
        report.rows.push_back(
            compare_estimate(metric, analytic.value, analytic.lower_bound, mc, k_sigma));
    }
    return report;
}

} // namespace secout
