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
//
// Command-line experiment runner. Subcommands reproduce the numbered
// experiment figures and expose the individual analytic/simulation
// operations; all tabular output is CSV.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "zfaging/analytics.hpp"
#include "zfaging/experiment.hpp"
#include "zfaging/simulator.hpp"

using namespace zfaging;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_path;
    uint64_t seed = 1;
    int64_t trials = 10000;
    std::string methods = "";
    double snr_db = NAN;
    double alpha = NAN;
    int antennas = 0;
    bool no_timing = false;
};

void add_common(CLI::App *cmd, CommonOpts &o) {
    cmd->add_option("--config", o.config_path, "config file (key = value)");
    cmd->add_option("--out", o.out_path, "CSV output path (default stdout)");
    cmd->add_option("--seed", o.seed, "master seed");
    cmd->add_option("--trials", o.trials, "Monte Carlo trials");
    cmd->add_option("--methods", o.methods, "comma list: exact,bound,quadrature,mc");
    cmd->add_option("--snr-db", o.snr_db, "override SNR in dB");
    cmd->add_option("--alpha", o.alpha, "override temporal correlation");
    cmd->add_option("--antennas", o.antennas, "override antenna count");
    cmd->add_flag("--no-timing", o.no_timing, "write zero elapsed_ms (byte-stable output)");
}

cli::Scenario load_scenario(const CommonOpts &o) {
    cli::Scenario sc = o.config_path.empty()
                           ? cli::default_scenario()
                           : cli::scenario_from_config(
                                 cli::Config::parse_file(o.config_path));
    if (!std::isnan(o.snr_db))
        sc.config.uplink_power = std::pow(10.0, o.snr_db / 10.0);
    if (!std::isnan(o.alpha)) {
        sc.config.mobility.reset();
        sc.config.alpha = o.alpha;
    }
    if (o.antennas > 0) sc.config.antennas = o.antennas;
    return sc;
}

std::vector<std::string> split_list(const std::string &s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<double> parse_range(const std::string &s) {
    // "lo:step:hi"
    double lo, step, hi;
    char c1, c2;
    std::istringstream in(s);
    if (!(in >> lo >> c1 >> step >> c2 >> hi) || c1 != ':' || c2 != ':')
        throw CLI::ValidationError("range must be lo:step:hi");
    std::vector<double> v;
    for (double x = lo; x <= hi + 1e-9 * std::fabs(step); x += step)
        v.push_back(x);
    return v;
}

int with_output(const std::string &path,
                const std::function<int(std::ostream &)> &fn) {
    if (path.empty()) return fn(std::cout);
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot open output file: " << path << "\n";
        return 1;
    }
    return fn(out);
}

int cmd_figure(int fig, const CommonOpts &o, bool methods_set, bool trials_set) {
    cli::ExperimentSpec spec;
    if (!o.config_path.empty()) spec.base = load_scenario(o);
    cli::apply_figure_defaults(spec, fig);
    if (!o.config_path.empty() || !std::isnan(o.snr_db) || !std::isnan(o.alpha) ||
        o.antennas > 0)
        spec.base = load_scenario(o);
    if (methods_set) spec.methods = split_list(o.methods);
    if (trials_set) spec.trials = o.trials;
    spec.seed = o.seed;
    spec.timing = !o.no_timing;
    return with_output(o.out_path, [&](std::ostream &csv) {
        return cli::run_experiment(spec, csv, std::cerr);
    });
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"uplink performance of multi-cell massive MIMO with ZF "
                 "receivers under channel aging"};
    app.require_subcommand(1);

    // ---- figure ----
    int figure_index = 1;
    CommonOpts fo;
    auto *figure = app.add_subcommand("figure", "reproduce experiment figure 1-5");
    figure->add_option("index", figure_index, "figure index 1..5")->required();
    add_common(figure, fo);

    // ---- rate ----
    CommonOpts ro;
    std::string sweep_snr, sweep_alpha, sweep_antennas;
    bool scale_power = false;
    auto *rate = app.add_subcommand("rate", "sum spectral efficiency (sweep)");
    add_common(rate, ro);
    rate->add_option("--sweep-snr-db", sweep_snr, "sweep lo:step:hi");
    rate->add_option("--sweep-alpha", sweep_alpha, "sweep lo:step:hi");
    rate->add_option("--sweep-antennas", sweep_antennas, "comma list of N");
    rate->add_flag("--scale-power", scale_power,
                   "scale p_r = E/sqrt(N) over antenna sweeps");

    // ---- outage ----
    CommonOpts oo;
    double gamma_th = 2.0;
    auto *outage = app.add_subcommand("outage", "outage probability");
    add_common(outage, oo);
    outage->add_option("--gamma-th", gamma_th, "SINR threshold")->required();

    // ---- lowsnr ----
    CommonOpts lo;
    auto *lowsnr = app.add_subcommand("lowsnr", "low-SNR metrics");
    add_common(lowsnr, lo);

    // ---- limits ----
    CommonOpts limo;
    double kappa = 10.0, energy = 1.0;
    auto *limits = app.add_subcommand("limits", "asymptotic SINR limits");
    add_common(limits, limo);
    limits->add_option("--kappa", kappa, "antenna/user ratio for the DE");
    limits->add_option("--energy", energy, "E for the power-scaling law");

    // ---- required-power ----
    CommonOpts rpo;
    double target = 1.0;
    std::string rp_method = "quadrature";
    auto *reqp = app.add_subcommand("required-power",
                                    "power needed for a target per-user rate");
    add_common(reqp, rpo);
    reqp->add_option("--target", target, "target rate, bits/s/Hz per user");
    reqp->add_option("--method", rp_method, "exact|bound|quadrature");

    // ---- validate ----
    CommonOpts vo;
    auto *validate = app.add_subcommand("validate", "check a config file");
    add_common(validate, vo);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*figure)
            return cmd_figure(figure_index, fo, figure->count("--methods") > 0,
                              figure->count("--trials") > 0);

        if (*rate) {
            cli::ExperimentSpec spec;
            spec.base = load_scenario(ro);
            spec.seed = ro.seed;
            spec.trials = ro.trials;
            spec.timing = !ro.no_timing;
            spec.scale_power = scale_power;
            if (!ro.methods.empty()) spec.methods = split_list(ro.methods);
            if (!sweep_snr.empty()) {
                spec.axis = cli::Axis::snr_db;
                spec.sweep = parse_range(sweep_snr);
            } else if (!sweep_alpha.empty()) {
                spec.axis = cli::Axis::alpha;
                spec.sweep = parse_range(sweep_alpha);
            } else if (!sweep_antennas.empty()) {
                spec.axis = cli::Axis::antennas;
                for (const auto &t : split_list(sweep_antennas))
                    spec.sweep.push_back(std::stod(t));
            } else {
                spec.axis = cli::Axis::snr_db;
                spec.sweep = {10.0 * std::log10(spec.base.config.uplink_power)};
            }
            return with_output(ro.out_path, [&](std::ostream &csv) {
                return cli::run_experiment(spec, csv, std::cerr);
            });
        }

        if (*outage) {
            const cli::Scenario sc = load_scenario(oo);
            const model::FadingProfile prof = sc.profile();
            const analytics::SinrLaw law = analytics::sinr_law(sc.config, prof, 0);
            return with_output(oo.out_path, [&](std::ostream &csv) {
                csv << "sweep_value,method,value,stderr,elapsed_ms\n";
                const double snr = 10.0 * std::log10(sc.config.uplink_power);
                csv << snr << ",closed," << analytics::outage_probability(law, gamma_th)
                    << ",,0\n";
                csv << snr << ",semi_analytic,"
                    << analytics::outage_semi_analytic(law, gamma_th) << ",,0\n";
                const auto mc = sim::mc_outage(sc.config, prof, 0, gamma_th,
                                               oo.trials, oo.seed);
                csv << snr << ",mc," << mc.mean << ',' << mc.stderr_ << ",0\n";
                return 0;
            });
        }

        if (*lowsnr) {
            const cli::Scenario sc = load_scenario(lo);
            const model::FadingProfile prof = sc.profile();
            const auto law = analytics::sinr_law(sc.config, prof, 0);
            const auto m = analytics::low_snr_metrics(law);
            std::cout << "ebn0_min_linear," << m.ebn0_min << "\n"
                      << "ebn0_min_db," << m.ebn0_min_db << "\n"
                      << "wideband_slope," << m.wideband_slope << "\n"
                      << "wideband_slope_printed_form," << m.wideband_slope_printed
                      << "\n";
            return 0;
        }

        if (*limits) {
            const cli::Scenario sc = load_scenario(limo);
            const model::FadingProfile prof = sc.profile();
            std::cout << "sinr_limit_infinite_n,"
                      << analytics::asymptotic_sinr_infinite_n(prof, 0) << "\n";
            std::cout << "rate_limit_infinite_n,"
                      << std::log2(1.0 + analytics::asymptotic_sinr_infinite_n(prof, 0))
                      << "\n";
            std::cout << "de_sinr_kappa_" << kappa << ","
                      << analytics::de_sinr_fixed_ratio(prof, 0, kappa) << "\n";
            std::cout << "power_scaling_sinr_E_" << energy << ","
                      << analytics::power_scaling_limit(prof, 0, energy,
                                                        sc.config.pilot_length)
                      << "\n";
            return 0;
        }

        if (*reqp) {
            const cli::Scenario sc = load_scenario(rpo);
            analytics::RateMethod method = analytics::RateMethod::quadrature;
            if (rp_method == "exact") method = analytics::RateMethod::exact;
            else if (rp_method == "bound") method = analytics::RateMethod::bound;
            else if (rp_method != "quadrature")
                throw std::runtime_error("unknown method: " + rp_method);
            const double p = sim::required_power(sc.config, sc.beta, 0, target,
                                                 method);
            std::cout << "required_power_linear," << p << "\n"
                      << "required_power_db," << 10.0 * std::log10(p) << "\n";
            return 0;
        }

        if (*validate) {
            if (vo.config_path.empty())
                throw std::runtime_error("validate requires --config");
            const cli::Config cfg = cli::Config::parse_file(vo.config_path);
            const cli::Scenario sc = cli::scenario_from_config(cfg);
            const model::FadingProfile prof = sc.profile();
            std::cout << "resolved parameters:\n"
                      << "  cells," << sc.config.cells << "\n"
                      << "  users," << sc.config.users_per_cell << "\n"
                      << "  antennas," << sc.config.antennas << "\n"
                      << "  pilot_length," << sc.config.pilot_length << "\n"
                      << "  coherence," << sc.config.coherence_symbols << "\n"
                      << "  power_linear," << sc.config.uplink_power << "\n"
                      << "  alpha," << prof.alpha() << "\n"
                      << "  beta_hat_home," << prof.beta_hat(0, 0, 0) << "\n"
                      << "  contamination_C," << prof.contamination(0, 0) << "\n"
                      << "  prelog," << sc.config.prelog() << "\n";
            const auto violations = model::validate(sc.config, &prof);
            bool hard = false;
            for (const auto &v : violations) {
                const bool warn = v.rfind("degenerate", 0) == 0;
                std::cout << (warn ? "warning: " : "violation: ") << v << "\n";
                hard = hard || !warn;
            }
            if (!hard) std::cout << "ok\n";
            return hard ? 1 : 0;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
