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

#include "zfaging/sysmodel.hpp"

#include <cmath>
#include <stdexcept>

#include "zfaging/specfun.hpp"

namespace zfaging::model {

namespace {
constexpr double kSpeedOfLight = 3.0e8; // m/s
}

double alpha_from_mobility(double velocity_mps, double carrier_hz,
                           double sample_period_s) {
    if (velocity_mps < 0.0)
        throw std::domain_error("alpha_from_mobility: negative velocity");
    if (carrier_hz <= 0.0 || sample_period_s <= 0.0)
        throw std::domain_error(
            "alpha_from_mobility: carrier and sample period must be positive");
    const double doppler = velocity_mps * carrier_hz / kSpeedOfLight;
    return specfun::bessel_j0(2.0 * M_PI * doppler * sample_period_s);
}

double SystemConfig::resolved_alpha() const {
    if (mobility)
        return alpha_from_mobility(mobility->velocity_mps, mobility->carrier_hz,
                                   mobility->sample_period_s);
    return alpha;
}

FadingProfile::FadingProfile(const SystemConfig &cfg, std::vector<double> beta)
    : L_(cfg.cells), K_(cfg.users_per_cell), alpha_(cfg.resolved_alpha()),
      p_tr_(cfg.training_power()), beta_(std::move(beta)) {
    if (static_cast<int>(beta_.size()) != L_ * L_ * K_)
        throw std::domain_error("FadingProfile: beta table must be L x L x K");
    for (double b : beta_)
        if (!(b > 0.0) || !std::isfinite(b))
            throw std::domain_error("FadingProfile: beta entries must be positive");
    if (!(cfg.uplink_power > 0.0))
        throw std::domain_error("FadingProfile: uplink power must be positive");

    beta_hat_.resize(beta_.size());
    err_var_.resize(beta_.size());
    contamination_.assign(L_ * K_, 0.0);
    const double a2 = alpha_ * alpha_;
    for (int l = 0; l < L_; ++l) {
        for (int k = 0; k < K_; ++k) {
            double pilot_sum = 1.0 / p_tr_;
            for (int j = 0; j < L_; ++j) pilot_sum += beta_[idx(l, j, k)];
            for (int i = 0; i < L_; ++i) {
                const double b = beta_[idx(l, i, k)];
                const double bh = b * b / pilot_sum;
                beta_hat_[idx(l, i, k)] = bh;
                err_var_[idx(l, i, k)] = b - a2 * bh;
                if (i != l) {
                    const double r = b / beta_[idx(l, l, k)];
                    contamination_[l * K_ + k] += r * r;
                }
            }
        }
    }
}

FadingProfile FadingProfile::symmetric(const SystemConfig &cfg,
                                       double intercell_factor) {
    if (!(intercell_factor > 0.0))
        throw std::domain_error("symmetric profile: intercell factor must be positive");
    const int L = cfg.cells, K = cfg.users_per_cell;
    std::vector<double> beta(static_cast<size_t>(L) * L * K);
    for (int l = 0; l < L; ++l)
        for (int i = 0; i < L; ++i)
            for (int k = 0; k < K; ++k)
                beta[(static_cast<size_t>(l) * L + i) * K + k] =
                    (i == l) ? 1.0 : intercell_factor;
    return FadingProfile(cfg, std::move(beta));
}

std::vector<double> FadingProfile::error_diagonal(int l) const {
    std::vector<double> d;
    d.reserve(static_cast<size_t>(L_) * K_);
    for (int i = 0; i < L_; ++i)
        for (int k = 0; k < K_; ++k) d.push_back(err_var_[idx(l, i, k)]);
    return d;
}

double FadingProfile::error_sum(int l) const {
    double s = 0.0;
    for (int i = 0; i < L_; ++i)
        for (int k = 0; k < K_; ++k) s += err_var_[idx(l, i, k)];
    return s;
}

double FadingProfile::error_trace(int l, int i) const {
    double s = 0.0;
    for (int k = 0; k < K_; ++k) s += err_var_[idx(l, i, k)];
    return s;
}

std::vector<std::string> validate(const SystemConfig &cfg,
                                  const FadingProfile *profile) {
    std::vector<std::string> v;
    if (cfg.cells < 1) v.push_back("cells: L must be >= 1");
    if (cfg.users_per_cell < 1) v.push_back("users: K must be >= 1");
    if (cfg.antennas < cfg.users_per_cell) v.push_back("antennas: N >= K required");
    if (cfg.pilot_length < cfg.users_per_cell)
        v.push_back("pilot_length: tau >= K required");
    if (cfg.pilot_length > cfg.coherence_symbols)
        v.push_back("pilot_length: tau <= T required");
    if (!(cfg.uplink_power > 0.0)) v.push_back("uplink_power: must be positive");
    const double a = cfg.resolved_alpha();
    if (!(a >= -1.0 && a <= 1.0))
        v.push_back("alpha: must lie in [-1, 1]");
    if (cfg.antennas == cfg.users_per_cell)
        v.push_back("degenerate: N = K, inverse-mean quantities undefined");
    if (profile) {
        const double a2 = a * a;
        for (int l = 0; l < profile->cells(); ++l)
            for (int i = 0; i < profile->cells(); ++i)
                for (int k = 0; k < profile->users(); ++k) {
                    const double b = profile->beta(l, i, k);
                    const double bh = profile->beta_hat(l, i, k);
                    if (!(bh > 0.0) || bh > b * (1.0 + 1e-12)) {
                        v.push_back("beta_hat: must satisfy 0 < beta_hat <= beta");
                        goto done;
                    }
                    if (profile->error_var(l, i, k) < -1e-12 * b) {
                        v.push_back("error variance: beta - alpha^2 beta_hat < 0");
                        goto done;
                    }
                    (void)a2;
                }
    done:;
    }
    return v;
}

} // namespace zfaging::model
