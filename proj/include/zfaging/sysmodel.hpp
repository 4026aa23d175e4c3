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

#include <optional>
#include <string>
#include <vector>

namespace zfaging::model {

/// Temporal correlation coefficient of the first-order Gauss-Markov fading
/// model under Jakes scattering: J0(2 pi f_D T_s) with Doppler
/// f_D = v f_c / c. v in m/s, f_c in Hz, T_s in s.
double alpha_from_mobility(double velocity_mps, double carrier_hz,
                           double sample_period_s);

struct Mobility {
    double velocity_mps = 0.0;
    double carrier_hz = 2e9;
    double sample_period_s = 1e-3;
};

/// Static description of the cellular uplink: geometry counts, frame
/// structure, transmit power and the channel-aging coefficient (given
/// either directly or through a mobility triple).
struct SystemConfig {
    int cells = 7;            ///< L
    int users_per_cell = 10;  ///< K
    int antennas = 100;       ///< N  (N >= K)
    int pilot_length = 10;    ///< tau (K <= tau <= T)
    int coherence_symbols = 200; ///< T
    double uplink_power = 1.0;   ///< p_r, linear
    double alpha = 1.0;          ///< in (-1, 1]; ignored when mobility set
    std::optional<Mobility> mobility;

    /// alpha, resolving the mobility triple when present
    double resolved_alpha() const;
    /// training power p_tr = tau * p_r
    double training_power() const { return pilot_length * uplink_power; }
    /// frame prelog 1 - tau/T
    double prelog() const {
        return 1.0 - static_cast<double>(pilot_length) / coherence_symbols;
    }
};

/// Large-scale fading table and every deterministic constant derived from
/// it. beta(l, i, k) is the gain between BS l and user k of cell i.
/// Immutable after construction.
class FadingProfile {
  public:
    /// General constructor: beta laid out as [l][i][k], dimensions L x L x K.
    FadingProfile(const SystemConfig &cfg, std::vector<double> beta);

    /// The symmetric multi-cell scenario: beta_llk = 1, beta_lik = a.
    static FadingProfile symmetric(const SystemConfig &cfg,
                                   double intercell_factor);

    int cells() const { return L_; }
    int users() const { return K_; }
    double alpha() const { return alpha_; }
    double training_power() const { return p_tr_; }

    double beta(int l, int i, int k) const { return beta_[idx(l, i, k)]; }
    /// MMSE estimate gain: beta_lik^2 / (sum_j beta_ljk + 1/p_tr)
    double beta_hat(int l, int i, int k) const { return beta_hat_[idx(l, i, k)]; }
    /// aging-plus-estimation error variance: beta_lik - alpha^2 beta_hat_lik
    double error_var(int l, int i, int k) const { return err_var_[idx(l, i, k)]; }
    /// pilot-contamination constant C_lk = sum_{i != l} (beta_lik/beta_llk)^2
    double contamination(int l, int k) const { return contamination_[l * K_ + k]; }
    /// cross-cell estimate ratio [D_i]_kk = beta_lik / beta_llk
    double estimate_ratio(int l, int i, int k) const {
        return beta(l, i, k) / beta(l, l, k);
    }

    /// the KL-long diagonal {error_var(l, i, k') : i, k'} feeding the
    /// interference spectrum at BS l
    std::vector<double> error_diagonal(int l) const;
    /// sum of the error diagonal at BS l
    double error_sum(int l) const;
    /// per-cell trace of the error block: sum_k error_var(l, i, k)
    double error_trace(int l, int i) const;

  private:
    int idx(int l, int i, int k) const { return (l * L_ + i) * K_ + k; }
    int L_, K_;
    double alpha_, p_tr_;
    std::vector<double> beta_, beta_hat_, err_var_, contamination_;
};

/// All invariant violations of the pair, empty when valid. The N = K
/// configuration is reported as degenerate (inverse-mean quantities
/// undefined) but does not block simulation.
std::vector<std::string> validate(const SystemConfig &cfg,
                                  const FadingProfile *profile = nullptr);

} // namespace zfaging::model
