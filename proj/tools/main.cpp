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
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "secout/config.hpp"
#include "secout/errors.hpp"
#include "secout/format.hpp"
#include "secout/mc.hpp"
#include "secout/outage.hpp"
#include "secout/secrecy.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config_error = 1;
constexpr int exit_verification_failure = 2;

struct McOverrides {
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    int workers = -1;
    bool samples_set = false;
    bool seed_set = false;
    bool workers_set = false;

    void apply(secout::McConfig &mc) const {
        if (samples_set) {
            mc.samples = samples;
        }
        if (seed_set) {
            mc.seed = seed;
        }
        if (workers_set) {
            mc.workers = workers;
        }
    }
};

std::string flag_notes(const secout::MetricValue &value) {
    std::string notes;
    if (value.underflow) {
        notes += " (underflow below 1e-300)";
    }
    if (value.lower_bound) {
        notes += " (lower bound)";
    }
    return notes;
}

void print_metric_line(const std::string &name, const std::string &value,
                       const std::string &notes = "") {
    std::cout << name;
    for (std::size_t i = name.size(); i < 10; ++i) {
        std::cout << ' ';
    }
    std::cout << "= " << value << notes << "\n";
}

int run_eval(const std::string &config_path, bool with_mc, const McOverrides &overrides) {
    secout::ScenarioConfig config = secout::load_config(config_path);
    overrides.apply(config.mc);
    const secout::SecrecyScenario scenario = secout::make_scenario(config);
    const bool has_rate = scenario.rate > 0.0;

    std::cout << "desired: " << secout::family_name(scenario.desired.family);
    if (scenario.desired.family == secout::Family::NakagamiM) {
        std::cout << " m=" << secout::format_number(scenario.desired.m);
    }
    if (scenario.desired.family == secout::Family::Rice) {
        std::cout << " K=" << secout::format_number(scenario.desired.rice_k);
    }
    std::cout << " mean_snr=" << secout::format_number(scenario.desired.mean_snr)
              << "; eavesdropper branches: " << scenario.eavesdropper_branches.size()
              << "; rate_bits=" << secout::format_number(scenario.rate)
              << "; mu=" << secout::format_number(scenario.mu) << "\n";

    const secout::MetricValue plus = secout::p_s_plus(scenario);
    if (has_rate) {
        const secout::MetricValue ps = secout::p_s(scenario);
        const secout::MetricValue pso = secout::p_so(scenario);
        print_metric_line("p_s", secout::format_number(ps.value), flag_notes(ps));
        print_metric_line("p_so", secout::format_number(pso.value), flag_notes(pso));
    } else {
        print_metric_line("p_s", "not-applicable (rate_bits = 0)");
        print_metric_line("p_so", "not-applicable (rate_bits = 0)");
    }
    print_metric_line("p_s_plus", secout::format_number(plus.value), flag_notes(plus));

    // The interference-side view of the same scenario: threshold
    // gamma = 2^rate - 1 with each branch scaled by 2^rate / (2^rate - 1)
    // for op_ni; op_i additionally shown at threshold 1 on unscaled
    // branches, whose complement is p_s_plus.
    if (has_rate) {
        const secout::DualityMap map = secout::duality_map(scenario.rate);
        const secout::InterferenceScenario mapped =
            secout::to_interference(scenario, map.scale);
        const secout::MetricValue ni = secout::op_ni(mapped, map.gamma);
        const secout::MetricValue i_only = secout::op_i(mapped, map.gamma);
        print_metric_line("op_n", secout::format_number(
                                      secout::op_n(scenario.desired, map.gamma)));
        print_metric_line("op_i", secout::format_number(i_only.value), flag_notes(i_only));
        print_metric_line("op_ni", secout::format_number(ni.value), flag_notes(ni));
    } else {
        const secout::MetricValue i_unit =
            secout::op_i(secout::to_interference(scenario, 1.0), 1.0);
        print_metric_line("op_i", secout::format_number(i_unit.value), flag_notes(i_unit));
    }

    if (with_mc) {
        const secout::SecrecyEstimates mc = secout::estimate_secrecy(scenario, config.mc);
        if (has_rate) {
            print_metric_line("mc_p_s", secout::format_number(mc.p_s.p_hat),
                              " +/- " + secout::format_number(mc.p_s.std_err));
            if (mc.p_so_valid) {
                print_metric_line("mc_p_so", secout::format_number(mc.p_so.p_hat),
                                  " +/- " + secout::format_number(mc.p_so.std_err));
            } else {
                print_metric_line("mc_p_so", "inconclusive (conditioning event too rare)");
            }
        }
        print_metric_line("mc_p_s_plus", secout::format_number(mc.p_s_plus.p_hat),
                          " +/- " + secout::format_number(mc.p_s_plus.std_err));
    }
    return exit_ok;
}

secout::ScenarioConfig apply_sweep_value(secout::ScenarioConfig config,
                                         const std::string &field, double value) {
    if (field == "desired.mean_snr_db") {
        config.desired.mean_snr_db = value;
    } else if (field == "secrecy.rate_bits") {
        if (value < 0.0) {
            throw secout::validation_error("sweep drove secrecy.rate_bits below 0");
        }
        config.rate_bits = value;
    } else if (field == "eavesdropper.mean_snr_db") {
        for (secout::LinkSpec &branch : config.branches) {
            branch.mean_snr_db = value;
        }
    } else if (field == "eavesdropper.count") {
        if (!config.branches_uniform) {
            throw secout::validation_error(
                "sweeping eavesdropper.count needs a uniform eavesdropper section "
                "(per-branch override keys present)");
        }
        const double rounded = std::nearbyint(value);
        if (std::abs(value - rounded) > 1e-9 || rounded < 1.0 || rounded > 100000.0) {
            throw secout::validation_error(
                "eavesdropper.count sweep values must be integers in [1, 100000]");
        }
        config.branches.assign(static_cast<std::size_t>(rounded), config.branches.front());
    } else {
        throw secout::validation_error(
            "unknown sweep field '" + field +
            "'; expected desired.mean_snr_db, secrecy.rate_bits, "
            "eavesdropper.mean_snr_db, or eavesdropper.count");
    }
    return config;
}

std::vector<double> sweep_grid(double from, double to, double step) {
    if (!(std::isfinite(from) && std::isfinite(to) && std::isfinite(step)) || step == 0.0) {
        throw secout::validation_error("sweep needs finite --from/--to and nonzero --step");
    }
    std::vector<double> grid;
    const double slack = std::abs(step) * 1e-9;
    for (std::size_t i = 0;; ++i) {
        const double value = from + static_cast<double>(i) * step;
        if (step > 0.0 ? value > to + slack : value < to - slack) {
            break;
        }
        grid.push_back(value);
    }
    if (grid.empty()) {
        throw secout::validation_error("sweep grid is empty (check --from/--to/--step signs)");
    }
    return grid;
}

int run_sweep(const std::string &config_path, const std::string &out_path,
              const std::string &field, double from, double to, double step, bool with_mc,
              const McOverrides &overrides) {
    secout::ScenarioConfig base = secout::load_config(config_path);
    overrides.apply(base.mc);
    const std::vector<double> grid = sweep_grid(from, to, step);

    std::string csv;
    csv += "sweep_field,sweep_value,p_s,p_so,p_s_plus";
    if (with_mc) {
        csv += ",mc_p_s,mc_stderr_p_s,mc_p_so,mc_stderr_p_so,mc_p_s_plus,mc_stderr_p_s_plus";
    }
    csv += "\n";

    const double nan = std::nan("");
    for (double value : grid) {
        const secout::ScenarioConfig point = apply_sweep_value(base, field, value);
        const secout::SecrecyScenario scenario = secout::make_scenario(point);
        const bool has_rate = scenario.rate > 0.0;

        double ps = nan;
        double pso = nan;
        if (has_rate) {
            ps = secout::p_s(scenario).value;
            pso = secout::p_so(scenario).value;
        }
        const double plus = secout::p_s_plus(scenario).value;

        csv += field + "," + secout::format_number(value) + "," +
               secout::format_number(ps) + "," + secout::format_number(pso) + "," +
               secout::format_number(plus);
        if (with_mc) {
            const secout::SecrecyEstimates mc = secout::estimate_secrecy(scenario, point.mc);
            double mc_ps = nan;
            double mc_ps_err = nan;
            double mc_pso = nan;
            double mc_pso_err = nan;
            if (has_rate) {
                mc_ps = mc.p_s.p_hat;
                mc_ps_err = mc.p_s.std_err;
                if (mc.p_so_valid) {
                    mc_pso = mc.p_so.p_hat;
                    mc_pso_err = mc.p_so.std_err;
                }
            }
            csv += "," + secout::format_number(mc_ps) + "," + secout::format_number(mc_ps_err) +
                   "," + secout::format_number(mc_pso) + "," +
                   secout::format_number(mc_pso_err) + "," +
                   secout::format_number(mc.p_s_plus.p_hat) + "," +
                   secout::format_number(mc.p_s_plus.std_err);
        }
        csv += "\n";
    }

    if (out_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            throw secout::validation_error("cannot open output file '" + out_path + "'");
        }
        out << csv;
        if (!out.good()) {
            throw secout::validation_error("failed writing output file '" + out_path + "'");
        }
    }
    return exit_ok;
}

int run_verify(const std::string &config_path, const std::string &out_path, double k_sigma,
               const McOverrides &overrides) {
    secout::ScenarioConfig config = secout::load_config(config_path);
    overrides.apply(config.mc);
    const secout::SecrecyScenario scenario = secout::make_scenario(config);

    std::vector<secout::Metric> metrics;
    if (scenario.rate > 0.0) {
        metrics = {secout::Metric::p_s, secout::Metric::p_so, secout::Metric::p_s_plus};
    } else {
        metrics = {secout::Metric::p_s_plus};
    }
    const secout::VerificationReport report =
        secout::verify(scenario, metrics, config.mc, k_sigma);

    std::cout << "metric     analytic          mc_estimate       mc_stderr         "
                 "sigma_dist  status\n";
    bool any_inconclusive = false;
    for (const secout::VerificationRow &row : report.rows) {
        std::string name = secout::metric_name(row.metric);
        if (row.analytic_is_lower_bound) {
            name += "*";
        }
        std::cout << name;
        for (std::size_t i = name.size(); i < 11; ++i) {
            std::cout << ' ';
        }
        auto cell = [](const std::string &text) {
            std::string padded = text;
            while (padded.size() < 18) {
                padded += ' ';
            }
            return padded;
        };
        std::cout << cell(secout::format_number(row.analytic))
                  << cell(secout::format_number(row.mc.p_hat))
                  << cell(secout::format_number(row.mc.std_err))
                  << cell(secout::format_number(row.sigma_distance))
                  << secout::check_status_name(row.status) << "\n";
        any_inconclusive |= row.status == secout::CheckStatus::inconclusive;
    }
    if (any_inconclusive) {
        std::cout << "warning: some metrics are below the Monte Carlo resolution floor "
                     "(min(p, 1-p) * samples < 25); raise --samples to judge them\n";
    }
    for (const secout::VerificationRow &row : report.rows) {
        if (row.analytic_is_lower_bound) {
            std::cout << "note: * = analytic value is a lower bound (mu above the rate "
                         "threshold); checked one-sided\n";
            break;
        }
    }
    std::cout << (report.all_pass() ? "verification: PASS" : "verification: FAIL") << "\n";

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            throw secout::validation_error("cannot open output file '" + out_path + "'");
        }
        out << "metric,analytic,mc_estimate,mc_stderr,sigma_distance,lower_bound,status\n";
        for (const secout::VerificationRow &row : report.rows) {
            out << secout::metric_name(row.metric) << ","
                << secout::format_number(row.analytic) << ","
                << secout::format_number(row.mc.p_hat) << ","
                << secout::format_number(row.mc.std_err) << ","
                << secout::format_number(row.sigma_distance) << ","
                << (row.analytic_is_lower_bound ? 1 : 0) << ","
                << secout::check_status_name(row.status) << "\n";
        }
    }
    return report.all_pass() ? exit_ok : exit_verification_failure;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"outage and secrecy outage probabilities for fading wireless channels"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string field;
    double from = 0.0;
    double to = 0.0;
    double step = 1.0;
    double k_sigma = 4.0;
    bool with_mc = false;
    McOverrides overrides;
    std::uint64_t samples_value = 0;
    std::uint64_t seed_value = 0;
    int workers_value = 0;

    auto add_common = [&](CLI::App *cmd, bool needs_mc_toggle) {
        cmd->add_option("--config", config_path, "scenario config file")
            ->required()
            ->check(CLI::ExistingFile);
        auto *samples_opt =
            cmd->add_option("--samples", samples_value, "Monte Carlo sample count override");
        samples_opt->check(CLI::PositiveNumber);
        auto *seed_opt = cmd->add_option("--seed", seed_value, "Monte Carlo seed override");
        auto *workers_opt = cmd->add_option("--workers", workers_value,
                                            "Monte Carlo worker thread count (0 = auto)");
        workers_opt->check(CLI::NonNegativeNumber);
        cmd->parse_complete_callback([&, samples_opt, seed_opt, workers_opt]() {
            if (samples_opt->count() > 0) {
                overrides.samples = samples_value;
                overrides.samples_set = true;
            }
            if (seed_opt->count() > 0) {
                overrides.seed = seed_value;
                overrides.seed_set = true;
            }
            if (workers_opt->count() > 0) {
                overrides.workers = workers_value;
                overrides.workers_set = true;
            }
        });
        if (needs_mc_toggle) {
            cmd->add_flag("--mc,!--no-mc", with_mc,
                          "also run the Monte Carlo estimator (default: off)");
        }
    };

    CLI::App *eval_cmd = app.add_subcommand("eval", "evaluate all metrics for one scenario");
    add_common(eval_cmd, true);

    CLI::App *sweep_cmd =
        app.add_subcommand("sweep", "evaluate metrics over a parameter grid, emitting CSV");
    add_common(sweep_cmd, true);
    sweep_cmd->add_option("--field", field, "swept field (desired.mean_snr_db, "
                                            "secrecy.rate_bits, eavesdropper.mean_snr_db, "
                                            "eavesdropper.count)")
        ->required();
    sweep_cmd->add_option("--from", from, "first grid value")->required();
    sweep_cmd->add_option("--to", to, "last grid value (inclusive)")->required();
    sweep_cmd->add_option("--step", step, "grid increment")->required();
    sweep_cmd->add_option("--out", out_path, "CSV output path (default: standard output)");

    CLI::App *verify_cmd = app.add_subcommand(
        "verify", "compare analytic metrics against the Monte Carlo oracle");
    add_common(verify_cmd, false);
    verify_cmd->add_option("--sigma", k_sigma, "pass threshold in standard errors")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--out", out_path, "also write the report as CSV to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_config_error;
    }

    try {
        if (eval_cmd->parsed()) {
            return run_eval(config_path, with_mc, overrides);
        }
        if (sweep_cmd->parsed()) {
            return run_sweep(config_path, out_path, field, from, to, step, with_mc, overrides);
        }
        return run_verify(config_path, out_path, k_sigma, overrides);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config_error;
    }
}
