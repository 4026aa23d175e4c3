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

#include "zfaging/hypoexp.hpp"
#include "zfaging/sysmodel.hpp"

namespace zfaging::analytics {

/// Distributional description of the post-detection SINR of one user:
///   gamma = alpha^2 p_r X / (alpha^2 p_r C X + p_r Y + 1)
/// with X Erlang(N-K+1, beta_hat_llk) (the inverse squared norm of the
/// detector row) and Y the hypoexponential sum of the KL aging/estimation
/// error terms. C is the pilot-contamination constant.
struct SinrLaw {
    double alpha = 1.0;
    double p_r = 1.0;
    double C = 0.0;
    int N = 0;
    int K = 0;
    specfun::ErlangLaw erlang;      ///< shape N-K+1, scale beta_hat_llk
    specfun::SpectralData spectral; ///< spectrum of the error sum Y
    bool y_degenerate = false;      ///< Y identically zero (perfect CSI)
    double error_sum = 0.0;         ///< trace of the full error diagonal
    int home_cell = 0;
    int user = 0;
};

/// Assemble the SINR law of user k at its serving BS. Error-diagonal
/// entries at numerical zero (<= 1e-15 of the largest large-scale gain)
/// are dropped; if none survive, the law is flagged Y-degenerate and the
/// downstream operations use the Erlang-only reduction.
SinrLaw sinr_law(const model::SystemConfig &cfg,
                 const model::FadingProfile &profile, int user_k,
                 int home_cell = 0);

/// A rate value together with the conditioning of the signed sum that
/// produced it. When `cancellation` is set the closed form lost its
/// leading digits and the quadrature path should be preferred.
struct RateResult {
    double bits_per_sym = 0.0;
    bool cancellation = false;
    double condition = 1.0; ///< max |term| / |result|
};

/// Ergodic rate E[log2(1 + gamma)] in closed form (finite sums of
/// exponential-integral moments and confluent hypergeometric reductions).
/// Requires N > K; alpha = 0 returns 0 by convention. The optional p_r
/// override evaluates the same frozen law at a different transmit power
/// (the law's Erlang/spectral parameters are kept fixed).
RateResult ergodic_rate_exact(const SinrLaw &law);
RateResult ergodic_rate_exact(const SinrLaw &law, double p_r);

/// Specialization for an all-distinct error spectrum (multiplicities all
/// one), built on the product-formula coefficients and the incomplete
/// gamma reduction of the hypergeometric term. Throws std::domain_error
/// when the spectrum has repeated eigenvalues.
RateResult ergodic_rate_distinct(const SinrLaw &law);

/// Reference path: nested adaptive quadrature of the defining expectation
/// against the Erlang and hypoexponential densities, to absolute tolerance
/// abs_tol. Handles alpha = 0, N = K and Y-degenerate laws.
double ergodic_rate_quadrature(const SinrLaw &law, double abs_tol = 1e-7);
double ergodic_rate_quadrature(const SinrLaw &law, double p_r,
                               double abs_tol);

/// Rate of the infinite-power SINR ceiling gamma -> alpha^2 X/(alpha^2 C X + Y).
double ceiling_rate(const SinrLaw &law, double abs_tol = 1e-7);

/// Jensen lower bound log2(1 + 1/E[1/gamma]) in closed form. Requires N > K.
double rate_lower_bound(const SinrLaw &law);
double rate_lower_bound(const SinrLaw &law, double p_r);

/// Outage probability P(gamma <= gamma_th). Exactly 1 for
/// gamma_th >= 1/C; otherwise the closed form derived from the Erlang CDF
/// expansion, assembled in quad precision and clamped to [0, 1].
double outage_probability(const SinrLaw &law, double gamma_th);

/// The outage expression as printed in the source derivation (missing the
/// power weights restored by outage_probability). Kept for documenting the
/// discrepancy; do not use for results.
double outage_probability_paper_literal(const SinrLaw &law, double gamma_th);

/// Semi-analytic oracle: one-dimensional quadrature of the Erlang CDF
/// against the hypoexponential density.
double outage_semi_analytic(const SinrLaw &law, double gamma_th,
                            double abs_tol = 1e-9);

struct LowSnrMetrics {
    double ebn0_min = 0.0;    ///< linear
    double ebn0_min_db = 0.0;
    double wideband_slope = 0.0;
    /// the printed closed form of the slope, reported for comparison only
    /// (its sign/normalization disagree with the derivative definition)
    double wideband_slope_printed = 0.0;
};

/// Minimum energy per bit and wideband slope from the first two
/// derivatives of the rate at zero SNR (moment evaluation of the frozen
/// law). Requires alpha != 0.
LowSnrMetrics low_snr_metrics(const SinrLaw &law);

/// Almost-sure SINR limit 1/C as N grows with K fixed. Throws
/// std::domain_error for C = 0 (single cell: the limit is unbounded).
double asymptotic_sinr_infinite_n(const model::FadingProfile &profile,
                                  int user_k, int home_cell = 0);

/// Deterministic equivalent of the SINR when N, K grow at fixed ratio
/// kappa = N/K > 1. Independent of the transmit power.
double de_sinr_fixed_ratio(const model::FadingProfile &profile, int user_k,
                           double kappa, int home_cell = 0);

/// Non-zero SINR limit under the power scaling p_r = E/sqrt(N):
/// alpha^2 tau E^2 beta^2 / (alpha^2 tau E^2 C beta^2 + 1).
double power_scaling_limit(const model::FadingProfile &profile, int user_k,
                           double energy, int pilot_length,
                           int home_cell = 0);

enum class RateMethod { exact, bound, quadrature };

/// Sum spectral efficiency (1 - tau/T) sum_k R_k of the home cell.
double sum_spectral_efficiency(const model::SystemConfig &cfg,
                               const model::FadingProfile &profile,
                               RateMethod method, int home_cell = 0);

} // namespace zfaging::analytics
