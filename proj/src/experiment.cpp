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

#include "zfaging/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "zfaging/analytics.hpp"
#include "zfaging/parallel.hpp"
#include "zfaging/simulator.hpp"

namespace zfaging::cli {

namespace {

std::string trim(const std::string &s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

std::string fmt(double v, const char *spec = "%.12g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

} // namespace

Config Config::parse(std::istream &in, const std::string &source) {
    Config cfg;
    cfg.source_ = source;
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError(source, lineno, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw ParseError(source, lineno, "empty section name");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError(source, lineno, "expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError(source, lineno, "empty key");
        if (val.empty()) throw ParseError(source, lineno, "empty value for " + key);
        const std::string full = section.empty() ? key : section + "." + key;
        if (cfg.kv_.count(full))
            throw ParseError(source, lineno, "duplicate key " + full);
        cfg.kv_[full] = val;
        cfg.lines_[full] = lineno;
    }
    return cfg;
}

Config Config::parse_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return parse(in, path);
}

void Config::fail(const std::string &key, const std::string &msg) const {
    const auto it = lines_.find(key);
    throw ParseError(source_, it == lines_.end() ? 0 : it->second,
                     key + ": " + msg);
}

std::string Config::get_string(const std::string &key,
                               std::string fallback) const {
    const auto it = kv_.find(key);
    return it == kv_.end() ? fallback : it->second;
}

int Config::get_int(const std::string &key, int fallback) const {
    const auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    try {
        size_t pos = 0;
        const int v = std::stoi(it->second, &pos);
        if (pos != it->second.size()) fail(key, "trailing characters");
        return v;
    } catch (const ParseError &) {
        throw;
    } catch (const std::exception &) {
        fail(key, "not an integer: " + it->second);
    }
}

double Config::get_double(const std::string &key, double fallback) const {
    const auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    try {
        size_t pos = 0;
        const double v = std::stod(it->second, &pos);
        if (pos != it->second.size()) fail(key, "trailing characters");
        return v;
    } catch (const ParseError &) {
        throw;
    } catch (const std::exception &) {
        fail(key, "not a number: " + it->second);
    }
}

Scenario scenario_from_config(const Config &cfg) {
    Scenario sc;
    auto &c = sc.config;
    c.cells = cfg.get_int("system.cells", 7);
    c.users_per_cell = cfg.get_int("system.users", 10);
    c.antennas = cfg.get_int("system.antennas", 100);
    c.pilot_length = cfg.get_int("system.pilot_length", c.users_per_cell);
    c.coherence_symbols = cfg.get_int("system.coherence", 200);
    if (cfg.has("system.power"))
        c.uplink_power = cfg.get_double("system.power", 1.0);
    else
        c.uplink_power = db_to_linear(cfg.get_double("system.snr_db", 0.0));
    if (cfg.has("system.velocity")) {
        model::Mobility m;
        m.velocity_mps = cfg.get_double("system.velocity", 0.0);
        m.carrier_hz = cfg.get_double("system.carrier", 2e9);
        m.sample_period_s = cfg.get_double("system.sample_period", 1e-3);
        c.mobility = m;
    } else {
        c.alpha = cfg.get_double("system.alpha", 1.0);
    }

    const std::string mode = cfg.get_string("fading.mode", "symmetric");
    const int L = c.cells, K = c.users_per_cell;
    if (mode == "symmetric") {
        const double a = cfg.get_double("fading.intercell", 0.1);
        sc.beta.assign(static_cast<size_t>(L) * L * K, a);
        for (int l = 0; l < L; ++l)
            for (int k = 0; k < K; ++k)
                sc.beta[(static_cast<size_t>(l) * L + l) * K + k] = 1.0;
    } else if (mode == "explicit") {
        sc.beta.assign(static_cast<size_t>(L) * L * K, 0.0);
        for (int l = 0; l < L; ++l)
            for (int i = 0; i < L; ++i)
                for (int k = 0; k < K; ++k) {
                    const std::string key = "fading.beta." + std::to_string(l) +
                                            "." + std::to_string(i) + "." +
                                            std::to_string(k);
                    const double v = cfg.get_double(key, -1.0);
                    if (v <= 0.0)
                        throw std::runtime_error("missing or non-positive " + key);
                    sc.beta[(static_cast<size_t>(l) * L + i) * K + k] = v;
                }
    } else {
        throw std::runtime_error("fading.mode must be symmetric or explicit");
    }
    return sc;
}

Scenario default_scenario() {
    std::istringstream empty("");
    return scenario_from_config(Config::parse(empty, "<defaults>"));
}

void apply_figure_defaults(ExperimentSpec &spec, int figure) {
    spec.scenario_id = "figure" + std::to_string(figure);
    switch (figure) {
    case 1:
        spec.axis = Axis::snr_db;
        spec.sweep.clear();
        for (double s = -10.0; s <= 20.0 + 1e-9; s += 2.0) spec.sweep.push_back(s);
        spec.antenna_set = {20, 50, 100};
        spec.base.config.alpha = 0.9;
        spec.methods = {"exact", "bound", "mc"};
        break;
    case 2:
        spec.axis = Axis::alpha;
        spec.sweep.clear();
        for (double a = 0.05; a <= 1.0 + 1e-9; a += 0.05) spec.sweep.push_back(a);
        spec.antenna_set = {20, 50, 100};
        spec.base.config.uplink_power = 1.0;
        spec.methods = {"exact", "bound"};
        break;
    case 3:
        spec.axis = Axis::antennas;
        spec.sweep = {32, 64, 128, 256};
        spec.target_rate = 1.0;
        spec.methods = {"quadrature"};
        break;
    case 4:
        spec.axis = Axis::antennas;
        spec.sweep = {16, 32, 64, 128, 256, 512, 1024};
        spec.base.config.alpha = 0.9;
        spec.methods = {"quadrature"};
        break;
    case 5:
        spec.axis = Axis::snr_db;
        spec.sweep.clear();
        for (double s = -10.0; s <= 10.0 + 1e-9; s += 1.0) spec.sweep.push_back(s);
        spec.base.config.antennas = 100;
        spec.trials = 1000000;
        spec.methods = {"closed", "mc"};
        break;
    default:
        throw std::runtime_error("figure index must be 1..5");
    }
}

namespace {

using Clock = std::chrono::steady_clock;

struct Row {
    double sweep_value;
    std::string method;
    double value;
    std::optional<double> stderr_;
    long elapsed_ms;
};

void write_rows(const ExperimentSpec &spec, const std::vector<Row> &rows,
                std::ostream &csv) {
    csv << "sweep_value,method,value,stderr,elapsed_ms\n";
    for (const auto &r : rows) {
        csv << fmt(r.sweep_value, "%.10g") << ',' << r.method << ','
            << fmt(r.value);
        csv << ',';
        if (r.stderr_) csv << fmt(*r.stderr_);
        csv << ',' << (spec.timing ? r.elapsed_ms : 0) << '\n';
    }
}

model::SystemConfig at_axis(const ExperimentSpec &spec, double v, int n_override) {
    model::SystemConfig c = spec.base.config;
    if (n_override > 0) c.antennas = n_override;
    switch (spec.axis) {
    case Axis::snr_db:
        c.uplink_power = db_to_linear(v);
        break;
    case Axis::alpha:
        c.mobility.reset();
        c.alpha = v;
        break;
    case Axis::antennas:
        c.antennas = static_cast<int>(v);
        if (spec.scale_power)
            c.uplink_power =
                spec.base.config.uplink_power / std::sqrt(double(c.antennas));
        break;
    }
    return c;
}

// sum spectral efficiency by named method; stderr only for mc
std::pair<double, std::optional<double>>
sum_se(const std::string &method, const model::SystemConfig &c,
       const Scenario &sc, int64_t trials, uint64_t seed) {
    const model::FadingProfile prof(c, sc.beta);
    using analytics::RateMethod;
    if (method == "exact")
        return {analytics::sum_spectral_efficiency(c, prof, RateMethod::exact),
                std::nullopt};
    if (method == "bound")
        return {analytics::sum_spectral_efficiency(c, prof, RateMethod::bound),
                std::nullopt};
    if (method == "quadrature")
        return {analytics::sum_spectral_efficiency(c, prof,
                                                   RateMethod::quadrature),
                std::nullopt};
    if (method == "mc") {
        const sim::McEstimate e = sim::mc_sum_rate(c, prof, trials, seed);
        return {c.prelog() * e.mean, c.prelog() * e.stderr_};
    }
    throw std::runtime_error("unknown method: " + method);
}

int run_rate_sweep(const ExperimentSpec &spec, std::ostream &csv,
                   std::ostream &log) {
    std::vector<Row> rows;
    std::vector<int> antennas = spec.antenna_set;
    if (antennas.empty()) antennas = {0}; // keep base N
    for (double v : spec.sweep) {
        for (int n : antennas) {
            const model::SystemConfig c = at_axis(spec, v, n);
            const auto violations = model::validate(c);
            for (const auto &viol : violations)
                if (viol.rfind("degenerate", 0) != 0)
                    throw std::runtime_error("invalid sweep point: " + viol);
            for (const auto &m : spec.methods) {
                const auto t0 = Clock::now();
                const auto [val, err] = sum_se(m, c, spec.base, spec.trials,
                                               spec.seed);
                const long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                    Clock::now() - t0)
                                    .count();
                std::string label = m;
                if (antennas.size() > 1) label += "_n" + std::to_string(c.antennas);
                rows.push_back({v, label, val, err, ms});
            }
            // asymptotic reference curves on antenna sweeps
            if (spec.axis == Axis::antennas) {
                const model::FadingProfile prof(c, spec.base.beta);
                const double lim =
                    spec.scale_power
                        ? analytics::power_scaling_limit(
                              prof, 0, spec.base.config.uplink_power,
                              c.pilot_length)
                        : analytics::asymptotic_sinr_infinite_n(prof, 0);
                rows.push_back({v, spec.scale_power ? "limit_scaled" : "limit",
                                c.prelog() * c.users_per_cell *
                                    std::log2(1.0 + lim),
                                std::nullopt, 0});
            }
        }
    }
    write_rows(spec, rows, csv);
    log << spec.scenario_id << ": " << rows.size() << " rows\n";
    return 0;
}

int run_figure3(const ExperimentSpec &spec, std::ostream &csv,
                std::ostream &log) {
    std::vector<Row> rows;
    for (double alpha : {0.7, 0.9}) {
        for (double v : spec.sweep) {
            model::SystemConfig c = spec.base.config;
            c.antennas = static_cast<int>(v);
            c.mobility.reset();
            c.alpha = alpha;
            const auto t0 = Clock::now();
            double value;
            try {
                const double p = sim::required_power(
                    c, spec.base.beta, 0, spec.target_rate,
                    analytics::RateMethod::quadrature);
                value = 10.0 * std::log10(p); // report in dB like the plot
            } catch (const std::runtime_error &e) {
                log << "figure3: N=" << c.antennas << " alpha=" << alpha
                    << ": " << e.what() << "\n";
                return 1;
            }
            const long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                Clock::now() - t0)
                                .count();
            rows.push_back({v, "required_db_a" + fmt(alpha, "%.2g"), value,
                            std::nullopt, ms});
        }
    }
    write_rows(spec, rows, csv);
    log << "figure3: " << rows.size() << " rows\n";
    return 0;
}

int run_figure4(const ExperimentSpec &spec, std::ostream &csv,
                std::ostream &log) {
    std::vector<Row> rows;
    for (bool scaled : {false, true}) {
        for (double v : spec.sweep) {
            model::SystemConfig c = spec.base.config;
            c.antennas = static_cast<int>(v);
            c.uplink_power = scaled ? spec.base.config.uplink_power /
                                          std::sqrt(double(c.antennas))
                                    : spec.base.config.uplink_power;
            const model::FadingProfile prof(c, spec.base.beta);
            const auto t0 = Clock::now();
            const double se = analytics::sum_spectral_efficiency(
                c, prof, analytics::RateMethod::quadrature);
            const long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                Clock::now() - t0)
                                .count();
            rows.push_back({v, scaled ? "scaled" : "fixed", se, std::nullopt, ms});
            const double lim =
                scaled ? analytics::power_scaling_limit(
                             prof, 0, spec.base.config.uplink_power,
                             c.pilot_length)
                       : analytics::asymptotic_sinr_infinite_n(prof, 0);
            rows.push_back({v, scaled ? "limit_scaled" : "limit_fixed",
                            c.prelog() * c.users_per_cell * std::log2(1.0 + lim),
                            std::nullopt, 0});
        }
    }
    write_rows(spec, rows, csv);
    log << "figure4: " << rows.size() << " rows\n";
    return 0;
}

int run_figure5(const ExperimentSpec &spec, std::ostream &csv,
                std::ostream &log) {
    std::vector<Row> rows;
    const bool want_mc =
        std::find(spec.methods.begin(), spec.methods.end(), "mc") !=
        spec.methods.end();
    for (double alpha : {1.0, 0.9}) {
        for (double gth : {2.0, 3.0}) {
            const std::string tag =
                "_a" + fmt(alpha, "%.2g") + "_g" + fmt(gth, "%.2g");
            for (double v : spec.sweep) {
                model::SystemConfig c = spec.base.config;
                c.mobility.reset();
                c.alpha = alpha;
                c.uplink_power = db_to_linear(v);
                const model::FadingProfile prof(c, spec.base.beta);
                const analytics::SinrLaw law = analytics::sinr_law(c, prof, 0);
                auto t0 = Clock::now();
                const double closed = analytics::outage_probability(law, gth);
                long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              Clock::now() - t0)
                              .count();
                rows.push_back({v, "outage" + tag, closed, std::nullopt, ms});
                if (want_mc) {
                    t0 = Clock::now();
                    const sim::McEstimate e = sim::mc_outage(
                        c, prof, 0, gth, spec.trials, spec.seed);
                    ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             Clock::now() - t0)
                             .count();
                    rows.push_back({v, "mc" + tag, e.mean, e.stderr_, ms});
                }
            }
        }
    }
    write_rows(spec, rows, csv);
    log << "figure5: " << rows.size() << " rows\n";
    return 0;
}

} // namespace

int run_experiment(const ExperimentSpec &spec, std::ostream &csv,
                   std::ostream &log) {
    if (spec.sweep.empty()) throw std::runtime_error("empty sweep");
    if (spec.methods.empty()) throw std::runtime_error("no methods selected");
    for (double v : spec.sweep)
        if (!std::isfinite(v)) throw std::runtime_error("non-finite sweep value");
    if (spec.scenario_id == "figure3") return run_figure3(spec, csv, log);
    if (spec.scenario_id == "figure4") return run_figure4(spec, csv, log);
    if (spec.scenario_id == "figure5") return run_figure5(spec, csv, log);
    return run_rate_sweep(spec, csv, log);
}

} // namespace zfaging::cli

namespace zfaging::sim {

McEstimate mc_sum_rate(const model::SystemConfig &cfg,
                       const model::FadingProfile &profile, int64_t trials,
                       uint64_t seed, int home_cell) {
    std::vector<double> vals(trials);
    parallel_for(trials, [&](int64_t lo, int64_t hi) {
        for (int64_t t = lo; t < hi; ++t) {
            Rng rng(seed, static_cast<uint64_t>(t));
            const ChannelRealization real =
                draw_realization(cfg, profile, rng, home_cell);
            double sum = 0.0;
            for (int k = 0; k < cfg.users_per_cell; ++k)
                sum += std::log2(
                    1.0 + instantaneous_sinr(real, cfg, profile, k, home_cell));
            vals[t] = sum;
        }
    });
    McEstimate e;
    e.trials = trials;
    e.seed = seed;
    double mean = 0.0;
    for (double v : vals) mean += v;
    mean /= trials;
    double ss = 0.0;
    for (double v : vals) ss += (v - mean) * (v - mean);
    e.mean = mean;
    e.stderr_ = trials > 1 ? std::sqrt(ss / (trials - 1) / trials) : 0.0;
    return e;
}

} // namespace zfaging::sim
