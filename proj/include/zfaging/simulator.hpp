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

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "zfaging/analytics.hpp"
#include "zfaging/rng.hpp"
#include "zfaging/sysmodel.hpp"

namespace zfaging::sim {

/// One channel slot at the home BS: the (delayed) channel estimate, the
/// per-cell aging/estimation error matrices of the current slot, and the
/// zero-forcing rows.
struct ChannelRealization {
    Eigen::MatrixXcd estimate_prev;              ///< N x K, home estimate
    std::vector<Eigen::MatrixXcd> aging_errors;  ///< per source cell, N x K
    Eigen::MatrixXcd zf_rows;                    ///< K x N pseudo-inverse
    int redraws = 0; ///< rank-deficiency rejections while drawing

    /// cross-cell estimate: the home estimate scaled by the gain ratios
    Eigen::MatrixXcd cross_estimate(const model::FadingProfile &profile,
                                    int home_cell, int source_cell) const;
};

/// Draw one realization: the home-cell estimate columns from their
/// marginal law, error matrices with the aging variances, ZF rows via a
/// Householder QR factorization. Rank-deficient draws (numerically
/// possible, probability zero) are rejected and redrawn.
ChannelRealization draw_realization(const model::SystemConfig &cfg,
                                    const model::FadingProfile &profile,
                                    Rng &rng, int home_cell = 0);

/// Post-detection SINR of user k for this realization (one slot).
double instantaneous_sinr(const ChannelRealization &real,
                          const model::SystemConfig &cfg,
                          const model::FadingProfile &profile, int user_k,
                          int home_cell = 0);

/// Monte Carlo point estimate with provenance.
struct McEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
    int64_t trials = 0;
    uint64_t seed = 0;
};

/// Mean of log2(1 + sinr) over independent realizations. Deterministic
/// for a fixed seed: every trial owns the substream derived from its
/// index and the reduction runs in trial order.
McEstimate mc_ergodic_rate(const model::SystemConfig &cfg,
                           const model::FadingProfile &profile, int user_k,
                           int64_t trials, uint64_t seed, int home_cell = 0);

/// Fraction of realizations with sinr <= gamma_th. Warns on stderr when
/// fewer than 20 failures were observed (estimate unreliable).
McEstimate mc_outage(const model::SystemConfig &cfg,
                     const model::FadingProfile &profile, int user_k,
                     double gamma_th, int64_t trials, uint64_t seed,
                     int home_cell = 0);

/// Raw SINR samples from the matrix pipeline, in trial order.
std::vector<double> mc_sinr_samples(const model::SystemConfig &cfg,
                                    const model::FadingProfile &profile,
                                    int user_k, int64_t trials, uint64_t seed,
                                    int home_cell = 0);

/// SINR samples drawn from the reduced distributional law (Erlang X,
/// hypoexponential Y) instead of the matrix pipeline; the second route of
/// the distribution-equivalence check.
std::vector<double> reduced_law_sinr_samples(const analytics::SinrLaw &law,
                                             int64_t count, uint64_t seed);

/// Two-sample Kolmogorov-Smirnov distance.
double ks_distance(std::vector<double> a, std::vector<double> b);

/// Transmit power reaching the target per-user rate, by bisection on
/// p_r within [1e-6, 1e6] (the profile is rebuilt at every candidate
/// power, since the training quality follows p_tr = tau p_r). Throws
/// std::runtime_error citing the rate ceiling when the target exceeds the
/// infinite-power limit.
double required_power(const model::SystemConfig &cfg,
                      const std::vector<double> &beta, int user_k,
                      double target_rate, analytics::RateMethod method,
                      int home_cell = 0, double tol = 1e-4);

} // namespace zfaging::sim
