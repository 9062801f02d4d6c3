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

#include "secout/config.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "secout/errors.hpp"

namespace secout {

namespace {

struct Entry {
    std::string value;
    int line = 0;
    bool used = false;
};

using Section = std::map<std::string, Entry>;

struct RawConfig {
    std::string origin;
    std::map<std::string, Section> sections;
};

[[noreturn]] void fail_at(const RawConfig &raw, int line, const std::string &message) {
    std::ostringstream msg;
    msg << raw.origin << ":" << line << ": " << message;
    throw validation_error(msg.str());
}

[[noreturn]] void fail(const RawConfig &raw, const std::string &message) {
    std::ostringstream msg;
    msg << raw.origin << ": " << message;
    throw validation_error(msg.str());
}

std::string trim(const std::string &text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) {
        ++begin;
    }
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
        --end;
    }
    return text.substr(begin, end - begin);
}

bool known_section(const std::string &name) {
    return name == "desired" || name == "eavesdropper" || name == "secrecy" || name == "mc";
}

RawConfig read_raw(std::istream &in, const std::string &origin) {
    RawConfig raw;
    raw.origin = origin;
    std::string line;
    std::string current;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        const std::string text = trim(line);
        if (text.empty()) {
            continue;
        }
        if (text.front() == '[') {
            if (text.back() != ']') {
                fail_at(raw, line_no, "malformed section header '" + text + "'");
            }
            current = trim(text.substr(1, text.size() - 2));
            if (!known_section(current)) {
                fail_at(raw, line_no,
                        "unknown section [" + current +
                            "]; expected desired, eavesdropper, secrecy, or mc");
            }
            raw.sections[current]; // section may legitimately stay empty
            continue;
        }
        const std::size_t eq = text.find('=');
        if (eq == std::string::npos) {
            fail_at(raw, line_no, "expected 'key = value', got '" + text + "'");
        }
        if (current.empty()) {
            fail_at(raw, line_no, "key outside any [section]");
        }
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (key.empty()) {
            fail_at(raw, line_no, "empty key");
        }
        if (value.empty()) {
            fail_at(raw, line_no, "empty value for key '" + key + "'");
        }
        auto [it, inserted] = raw.sections[current].insert({key, Entry{value, line_no, false}});
        if (!inserted) {
            std::ostringstream msg;
            msg << "duplicate key '" << key << "' in section [" << current
                << "] (first set on line " << it->second.line << ")";
            fail_at(raw, line_no, msg.str());
        }
    }
    return raw;
}

Entry *find_entry(RawConfig &raw, const std::string &section, const std::string &key) {
    auto sec = raw.sections.find(section);
    if (sec == raw.sections.end()) {
        return nullptr;
    }
    auto entry = sec->second.find(key);
    if (entry == sec->second.end()) {
        return nullptr;
    }
    entry->second.used = true;
    return &entry->second;
}

const Entry &require_entry(RawConfig &raw, const std::string &section, const std::string &key) {
    Entry *entry = find_entry(raw, section, key);
    if (entry == nullptr) {
        fail(raw, "missing required field " + section + "." + key);
    }
    return *entry;
}

double parse_double(RawConfig &raw, const std::string &section, const std::string &key,
                    const Entry &entry) {
    errno = 0;
    char *end = nullptr;
    const double value = std::strtod(entry.value.c_str(), &end);
    if (end == entry.value.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(value)) {
        fail_at(raw, entry.line,
                section + "." + key + " must be a finite number, got '" + entry.value + "'");
    }
    return value;
}

std::uint64_t parse_u64(RawConfig &raw, const std::string &section, const std::string &key,
                        const Entry &entry) {
    errno = 0;
    char *end = nullptr;
    const unsigned long long value = std::strtoull(entry.value.c_str(), &end, 10);
    if (end == entry.value.c_str() || *end != '\0' || errno == ERANGE ||
        entry.value.front() == '-') {
        fail_at(raw, entry.line,
                section + "." + key + " must be a nonnegative integer, got '" + entry.value +
                    "'");
    }
    return static_cast<std::uint64_t>(value);
}

Family parse_family(RawConfig &raw, const std::string &section, const std::string &key,
                    const Entry &entry) {
    if (entry.value == "rayleigh") {
        return Family::Rayleigh;
    }
    if (entry.value == "nakagami") {
        return Family::NakagamiM;
    }
    if (entry.value == "rice") {
        return Family::Rice;
    }
    fail_at(raw, entry.line,
            section + "." + key + " must be rayleigh, nakagami, or rice, got '" + entry.value +
                "'");
}

/// Rejects shape keys that do not belong to the given family, e.g. a K
/// value on a Nakagami link.
void check_shape_keys(RawConfig &raw, const std::string &section, Family family,
                      const Entry *m_entry, const Entry *k_entry, const std::string &suffix) {
    if (m_entry != nullptr && family != Family::NakagamiM) {
        fail_at(raw, m_entry->line,
                section + ".m" + suffix + " applies to nakagami links only (model here is " +
                    (family == Family::Rayleigh ? "rayleigh" : "rice") + ")");
    }
    if (k_entry != nullptr && family != Family::Rice) {
        fail_at(raw, k_entry->line,
                section + ".K" + suffix + " applies to rice links only (model here is " +
                    (family == Family::Rayleigh ? "rayleigh" : "nakagami") + ")");
    }
}

LinkSpec read_desired(RawConfig &raw) {
    const std::string section = "desired";
    LinkSpec link;
    link.family = parse_family(raw, section, "model", require_entry(raw, section, "model"));
    link.mean_snr_db =
        parse_double(raw, section, "mean_snr_db", require_entry(raw, section, "mean_snr_db"));
    Entry *m_entry = find_entry(raw, section, "m");
    Entry *k_entry = find_entry(raw, section, "K");
    check_shape_keys(raw, section, link.family, m_entry, k_entry, "");
    if (link.family == Family::NakagamiM) {
        if (m_entry == nullptr) {
            fail(raw, "missing required field desired.m (nakagami model)");
        }
        link.m = parse_double(raw, section, "m", *m_entry);
    }
    if (link.family == Family::Rice) {
        if (k_entry == nullptr) {
            fail(raw, "missing required field desired.K (rice model)");
        }
        link.rice_k = parse_double(raw, section, "K", *k_entry);
    }
    return link;
}

/// Splits "key.3" into ("key", 3); plain keys report index 0.
std::pair<std::string, int> split_branch_key(const std::string &key) {
    const std::size_t dot = key.rfind('.');
    if (dot == std::string::npos || dot + 1 >= key.size()) {
        return {key, 0};
    }
    for (std::size_t i = dot + 1; i < key.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(key[i]))) {
            return {key, 0};
        }
    }
    return {key.substr(0, dot), std::atoi(key.c_str() + dot + 1)};
}

std::vector<LinkSpec> read_branches(RawConfig &raw, bool &uniform) {
    const std::string section = "eavesdropper";
    int count = 1;
    if (Entry *count_entry = find_entry(raw, section, "count")) {
        const std::uint64_t value = parse_u64(raw, section, "count", *count_entry);
        if (value < 1 || value > 100000) {
            fail_at(raw, count_entry->line, "eavesdropper.count must be in [1, 100000]");
        }
        count = static_cast<int>(value);
    }

    const Entry *shared_model = find_entry(raw, section, "model");
    const Entry *shared_m = find_entry(raw, section, "m");
    const Entry *shared_k = find_entry(raw, section, "K");
    const Entry *shared_snr = find_entry(raw, section, "mean_snr_db");

    // Per-branch overrides: collect key.INDEX entries up front so range
    // errors carry the right line.
    std::map<std::pair<std::string, int>, Entry *> overrides;
    uniform = true;
    if (auto sec = raw.sections.find(section); sec != raw.sections.end()) {
        for (auto &[key, entry] : sec->second) {
            const auto [base, index] = split_branch_key(key);
            if (index == 0) {
                continue;
            }
            if (base != "model" && base != "m" && base != "K" && base != "mean_snr_db") {
                fail_at(raw, entry.line,
                        "unknown per-branch key '" + key + "' in section [eavesdropper]");
            }
            if (index > count) {
                std::ostringstream msg;
                msg << "branch index " << index << " in '" << key << "' exceeds count = "
                    << count;
                fail_at(raw, entry.line, msg.str());
            }
            entry.used = true;
            uniform = false;
            overrides[{base, index}] = &entry;
        }
    }

    std::vector<LinkSpec> branches;
    branches.reserve(static_cast<std::size_t>(count));
    for (int i = 1; i <= count; ++i) {
        auto pick = [&](const char *base, const Entry *shared) -> const Entry * {
            auto it = overrides.find({base, i});
            return it != overrides.end() ? it->second : shared;
        };
        const Entry *model_entry = pick("model", shared_model);
        if (model_entry == nullptr) {
            std::ostringstream msg;
            msg << "missing required field eavesdropper.model (branch " << i
                << " has neither a shared nor a per-branch model)";
            fail(raw, msg.str());
        }
        LinkSpec link;
        link.family = parse_family(raw, section, "model", *model_entry);

        const Entry *snr_entry = pick("mean_snr_db", shared_snr);
        if (snr_entry == nullptr) {
            std::ostringstream msg;
            msg << "missing required field eavesdropper.mean_snr_db (branch " << i << ")";
            fail(raw, msg.str());
        }
        link.mean_snr_db = parse_double(raw, section, "mean_snr_db", *snr_entry);

        const Entry *m_entry = pick("m", link.family == Family::NakagamiM ? shared_m : nullptr);
        const Entry *k_entry = pick("K", link.family == Family::Rice ? shared_k : nullptr);
        // A per-branch shape key that contradicts the branch family is a
        // config bug; a shared shape key merely not applying here is not.
        auto own = [&](const char *base) -> const Entry * {
            auto it = overrides.find({base, i});
            return it != overrides.end() ? it->second : nullptr;
        };
        check_shape_keys(raw, section, link.family, own("m"), own("K"),
                         "." + std::to_string(i));
        if (link.family == Family::NakagamiM) {
            if (m_entry == nullptr) {
                std::ostringstream msg;
                msg << "missing required field eavesdropper.m (branch " << i
                    << " is nakagami)";
                fail(raw, msg.str());
            }
            link.m = parse_double(raw, section, "m", *m_entry);
        }
        if (link.family == Family::Rice) {
            if (k_entry == nullptr) {
                std::ostringstream msg;
                msg << "missing required field eavesdropper.K (branch " << i << " is rice)";
                fail(raw, msg.str());
            }
            link.rice_k = parse_double(raw, section, "K", *k_entry);
        }
        branches.push_back(link);
    }

    // A shared shape key that no branch can consume is a config bug even
    // though mixed-family branch lists may legitimately leave it unused on
    // some branches.
    const bool any_nakagami =
        std::any_of(branches.begin(), branches.end(),
                    [](const LinkSpec &b) { return b.family == Family::NakagamiM; });
    const bool any_rice = std::any_of(branches.begin(), branches.end(),
                                      [](const LinkSpec &b) { return b.family == Family::Rice; });
    if (shared_m != nullptr && !any_nakagami) {
        fail_at(raw, shared_m->line,
                "eavesdropper.m applies to nakagami links only (no branch is nakagami)");
    }
    if (shared_k != nullptr && !any_rice) {
        fail_at(raw, shared_k->line,
                "eavesdropper.K applies to rice links only (no branch is rice)");
    }
    return branches;
}

void read_secrecy(RawConfig &raw, ScenarioConfig &config) {
    const std::string section = "secrecy";
    const Entry &rate = require_entry(raw, section, "rate_bits");
    config.rate_bits = parse_double(raw, section, "rate_bits", rate);
    if (config.rate_bits < 0.0) {
        fail_at(raw, rate.line, "secrecy.rate_bits must be nonnegative");
    }
    if (Entry *mu = find_entry(raw, section, "mu_db")) {
        if (mu->value == "gamma") {
            config.mu_kind = MuSpec::rate_tied;
        } else if (mu->value == "-inf") {
            config.mu_kind = MuSpec::zero;
        } else {
            config.mu_kind = MuSpec::decibel;
            config.mu_db = parse_double(raw, section, "mu_db", *mu);
        }
    }
}

void read_mc(RawConfig &raw, McConfig &mc) {
    const std::string section = "mc";
    if (Entry *samples = find_entry(raw, section, "samples")) {
        mc.samples = parse_u64(raw, section, "samples", *samples);
        if (mc.samples < 1) {
            fail_at(raw, samples->line, "mc.samples must be at least 1");
        }
    }
    if (Entry *seed = find_entry(raw, section, "seed")) {
        mc.seed = parse_u64(raw, section, "seed", *seed);
    }
    if (Entry *workers = find_entry(raw, section, "workers")) {
        const std::uint64_t value = parse_u64(raw, section, "workers", *workers);
        if (value > 1024) {
            fail_at(raw, workers->line, "mc.workers must be in [0, 1024] (0 = auto)");
        }
        mc.workers = static_cast<int>(value);
    }
}

void check_all_used(const RawConfig &raw) {
    for (const auto &[section, entries] : raw.sections) {
        for (const auto &[key, entry] : entries) {
            if (!entry.used) {
                std::ostringstream msg;
                msg << "unknown key '" << key << "' in section [" << section << "]";
                fail_at(raw, entry.line, msg.str());
            }
        }
    }
}

FadingModel to_model(const LinkSpec &spec) {
    const double linear = std::pow(10.0, spec.mean_snr_db / 10.0);
    switch (spec.family) {
    case Family::Rayleigh:
        return FadingModel::rayleigh(linear);
    case Family::NakagamiM:
        return FadingModel::nakagami(spec.m, linear);
    case Family::Rice:
        return FadingModel::rice(spec.rice_k, linear);
    }
    return FadingModel::rayleigh(linear);
}

} // namespace

ScenarioConfig parse_config(std::istream &in, const std::string &origin) {
    RawConfig raw = read_raw(in, origin);
    if (raw.sections.find("desired") == raw.sections.end()) {
        fail(raw, "missing required section [desired]");
    }
    if (raw.sections.find("eavesdropper") == raw.sections.end()) {
        fail(raw, "missing required section [eavesdropper]");
    }
    if (raw.sections.find("secrecy") == raw.sections.end()) {
        fail(raw, "missing required section [secrecy]");
    }
    ScenarioConfig config;
    config.desired = read_desired(raw);
    config.branches = read_branches(raw, config.branches_uniform);
    read_secrecy(raw, config);
    read_mc(raw, config.mc);
    check_all_used(raw);
    return config;
}

ScenarioConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw validation_error("cannot open config file '" + path + "'");
    }
    return parse_config(in, path);
}

SecrecyScenario make_scenario(const ScenarioConfig &config) {
    SecrecyScenario scenario;
    scenario.desired = to_model(config.desired);
    scenario.eavesdropper_branches.reserve(config.branches.size());
    for (const LinkSpec &branch : config.branches) {
        scenario.eavesdropper_branches.push_back(to_model(branch));
    }
    scenario.rate = config.rate_bits;
    switch (config.mu_kind) {
    case MuSpec::zero:
        scenario.mu = 0.0;
        break;
    case MuSpec::rate_tied:
        scenario.mu = std::expm1(config.rate_bits * M_LN2);
        break;
    case MuSpec::decibel:
        scenario.mu = std::pow(10.0, config.mu_db / 10.0);
        break;
    }
    validate(scenario);
    return scenario;
}

} // namespace secout
