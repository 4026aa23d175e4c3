// SPDX-License-Identifier: Apache-2.0
//
// zfaging - uplink performance toolkit for multi-cell massive MIMO with
// zero-forcing receivers under channel aging and pilot contamination
// Copyright (C) 2026 zfaging contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zfaging/sysmodel.hpp"

namespace zfaging::cli {

/// Config parse failure with the offending line number.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string &source, int line, const std::string &what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
          line_number(line) {}
    int line_number;
};

/// Flat `key = value` file with [section] headers and # comments. Keys are
/// stored as "section.key". Values keep their raw text; typed getters
/// convert on access. Keys ending in _db are converted from decibel by
/// get_power.
class Config {
  public:
    static Config parse_file(const std::string &path);
    static Config parse(std::istream &in, const std::string &source);

    bool has(const std::string &key) const { return kv_.count(key) != 0; }
    std::string get_string(const std::string &key, std::string fallback) const;
    int get_int(const std::string &key, int fallback) const;
    double get_double(const std::string &key, double fallback) const;
    const std::map<std::string, std::string> &entries() const { return kv_; }

  private:
    std::map<std::string, std::string> kv_;
    std::map<std::string, int> lines_;
    std::string source_;
    [[noreturn]] void fail(const std::string &key, const std::string &msg) const;
};

/// A resolved scenario: system configuration plus the large-scale gain
/// table (stored raw so profiles can be rebuilt at any power).
struct Scenario {
    model::SystemConfig config;
    std::vector<double> beta; ///< L x L x K
    model::FadingProfile profile() const {
        return model::FadingProfile(config, beta);
    }
};

/// Build the scenario from a config file; [fading] mode = symmetric uses
/// the intercell factor, mode = explicit reads beta.l.i.k entries.
Scenario scenario_from_config(const Config &cfg);

/// The default scenario of the numerical experiments: 7 cells, 10 users,
/// intercell factor 0.1, tau = K = 10, T = 200.
Scenario default_scenario();

enum class Axis { snr_db, alpha, antennas };

struct ExperimentSpec {
    std::string scenario_id = "custom"; ///< figure1..figure5 | custom
    Scenario base = default_scenario();
    Axis axis = Axis::snr_db;
    std::vector<double> sweep;      ///< resolved sweep values
    std::vector<int> antenna_set;   ///< extra antenna curves (figures 1, 2)
    std::vector<std::string> methods{"exact", "bound", "mc"};
    int64_t trials = 10000;
    uint64_t seed = 1;
    bool scale_power = false; ///< p_r = E / sqrt(N) on antenna sweeps
    double gamma_th = 2.0;
    double target_rate = 1.0;
    bool timing = true; ///< write real elapsed_ms (off: zeros, byte-stable)
};

/// Populate spec fields with the defaults of the requested figure.
void apply_figure_defaults(ExperimentSpec &spec, int figure);

/// Run the experiment, writing CSV rows (header: sweep_value, method,
/// value, stderr, elapsed_ms) to `csv` and a human summary to `log`.
/// Returns a process exit code.
int run_experiment(const ExperimentSpec &spec, std::ostream &csv,
                   std::ostream &log);

} // namespace zfaging::cli

namespace zfaging::sim {
struct McEstimate;
/// Per-realization sum of all K users' log2(1 + sinr): the natural Monte
/// Carlo estimator of the cell sum rate (one detector factorization serves
/// every user of the slot).
McEstimate mc_sum_rate(const model::SystemConfig &cfg,
                       const model::FadingProfile &profile, int64_t trials,
                       uint64_t seed, int home_cell = 0);
} // namespace zfaging::sim
