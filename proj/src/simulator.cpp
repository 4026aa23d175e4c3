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

#include "zfaging/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <stdexcept>

#include "zfaging/parallel.hpp"

namespace zfaging::sim {

namespace {

void fill_cnormal(Eigen::MatrixXcd &m, Rng &rng,
                  const std::function<double(int)> &col_var) {
    for (int k = 0; k < m.cols(); ++k) {
        const double s = std::sqrt(0.5 * col_var(k));
        for (int i = 0; i < m.rows(); ++i)
            m(i, k) = std::complex<double>(s * rng.normal(), s * rng.normal());
    }
}

McEstimate fold(const std::vector<double> &values, uint64_t seed) {
    McEstimate e;
    e.trials = static_cast<int64_t>(values.size());
    e.seed = seed;
    double mean = 0.0;
    for (int64_t i = 0; i < e.trials; ++i) mean += values[i];
    mean /= e.trials;
    double ss = 0.0;
    for (int64_t i = 0; i < e.trials; ++i) {
        const double d = values[i] - mean;
        ss += d * d;
    }
    e.mean = mean;
    e.stderr_ = e.trials > 1 ? std::sqrt(ss / (e.trials - 1) / e.trials) : 0.0;
    return e;
}

} // namespace

Eigen::MatrixXcd
ChannelRealization::cross_estimate(const model::FadingProfile &profile,
                                   int home_cell, int source_cell) const {
    Eigen::MatrixXcd g = estimate_prev;
    for (int k = 0; k < g.cols(); ++k)
        g.col(k) *= profile.estimate_ratio(home_cell, source_cell, k);
    return g;
}

ChannelRealization draw_realization(const model::SystemConfig &cfg,
                                    const model::FadingProfile &profile,
                                    Rng &rng, int home_cell) {
    const int N = cfg.antennas, K = cfg.users_per_cell, L = cfg.cells;
    ChannelRealization real;
    real.estimate_prev.resize(N, K);
    for (int attempt = 0;; ++attempt) {
        fill_cnormal(real.estimate_prev, rng, [&](int k) {
            return profile.beta_hat(home_cell, home_cell, k);
        });
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(real.estimate_prev);
        const auto &qrm = qr.matrixQR();
        double dmin = INFINITY, dmax = 0.0;
        for (int k = 0; k < K; ++k) {
            const double d = std::abs(qrm(k, k));
            dmin = std::min(dmin, d);
            dmax = std::max(dmax, d);
        }
        if (dmin <= dmax * 1e-13) {
            real.redraws = attempt + 1;
            if (attempt > 50)
                throw std::runtime_error("draw_realization: persistent rank "
                                         "deficiency in channel estimate");
            continue;
        }
        Eigen::MatrixXcd thin_q =
            qr.householderQ() * Eigen::MatrixXcd::Identity(N, K);
        real.zf_rows = qrm.topRows(K)
                           .triangularView<Eigen::Upper>()
                           .solve(thin_q.adjoint());
        break;
    }
    real.aging_errors.resize(L);
    for (int i = 0; i < L; ++i) {
        real.aging_errors[i].resize(N, K);
        fill_cnormal(real.aging_errors[i], rng, [&](int k) {
            return profile.error_var(home_cell, i, k);
        });
    }
    return real;
}

double instantaneous_sinr(const ChannelRealization &real,
                          const model::SystemConfig &cfg,
                          const model::FadingProfile &profile, int user_k,
                          int home_cell) {
    const double alpha = profile.alpha();
    if (alpha == 0.0) return 0.0;
    const double a2 = alpha * alpha;
    const double p_r = cfg.uplink_power;
    const int L = cfg.cells, K = cfg.users_per_cell;

    const Eigen::RowVectorXcd w = real.zf_rows.row(user_k);
    // cross-cell estimates share the home column space: w * Ghat_li equals
    // (w * Ghat_ll) scaled per user by the gain ratios
    const Eigen::RowVectorXcd w_gll = w * real.estimate_prev;
    double contamination = 0.0;
    for (int i = 0; i < L; ++i) {
        if (i == home_cell) continue;
        double t = 0.0;
        for (int k = 0; k < K; ++k) {
            const double r = profile.estimate_ratio(home_cell, i, k);
            t += std::norm(w_gll(k) * r);
        }
        contamination += t;
    }
    double error_power = 0.0;
    for (int i = 0; i < L; ++i)
        error_power += (w * real.aging_errors[i]).squaredNorm();
    const double noise = w.squaredNorm();
    return a2 * p_r / (a2 * p_r * contamination + p_r * error_power + noise);
}

std::vector<double> mc_sinr_samples(const model::SystemConfig &cfg,
                                    const model::FadingProfile &profile,
                                    int user_k, int64_t trials, uint64_t seed,
                                    int home_cell) {
    std::vector<double> out(trials);
    parallel_for(trials, [&](int64_t lo, int64_t hi) {
        for (int64_t t = lo; t < hi; ++t) {
            Rng rng(seed, static_cast<uint64_t>(t));
            const ChannelRealization real =
                draw_realization(cfg, profile, rng, home_cell);
            out[t] = instantaneous_sinr(real, cfg, profile, user_k, home_cell);
        }
    });
    return out;
}

McEstimate mc_ergodic_rate(const model::SystemConfig &cfg,
                           const model::FadingProfile &profile, int user_k,
                           int64_t trials, uint64_t seed, int home_cell) {
    if (trials < 100)
        throw std::invalid_argument("mc_ergodic_rate: requires trials >= 100");
    std::vector<double> vals = mc_sinr_samples(cfg, profile, user_k, trials,
                                               seed, home_cell);
    for (double &v : vals) v = std::log2(1.0 + v);
    return fold(vals, seed);
}

McEstimate mc_outage(const model::SystemConfig &cfg,
                     const model::FadingProfile &profile, int user_k,
                     double gamma_th, int64_t trials, uint64_t seed,
                     int home_cell) {
    std::vector<double> vals = mc_sinr_samples(cfg, profile, user_k, trials,
                                               seed, home_cell);
    int64_t failures = 0;
    for (double &v : vals) {
        const double hit = v <= gamma_th ? 1.0 : 0.0;
        failures += v <= gamma_th;
        v = hit;
    }
    if (failures < 20)
        std::cerr << "mc_outage: only " << failures << " failures in "
                  << trials << " trials; estimate unreliable\n";
    return fold(vals, seed);
}

std::vector<double> reduced_law_sinr_samples(const analytics::SinrLaw &law,
                                             int64_t count, uint64_t seed) {
    std::vector<double> out(count);
    const double a2p = law.alpha * law.alpha * law.p_r;
    parallel_for(count, [&](int64_t lo, int64_t hi) {
        for (int64_t t = lo; t < hi; ++t) {
            Rng rng(seed, static_cast<uint64_t>(t));
            double x = 0.0;
            for (int i = 0; i < law.erlang.shape; ++i)
                x += rng.exponential(law.erlang.scale);
            double y = 0.0;
            if (!law.y_degenerate)
                for (int p = 0; p < law.spectral.distinct_count(); ++p)
                    for (int j = 0; j < law.spectral.multiplicities[p]; ++j)
                        y += rng.exponential(law.spectral.eigenvalues[p]);
            out[t] = law.alpha == 0.0
                         ? 0.0
                         : a2p * x / (a2p * law.C * x + law.p_r * y + 1.0);
        }
    });
    return out;
}

double ks_distance(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("ks_distance: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    size_t ia = 0, ib = 0;
    double d = 0.0;
    while (ia < a.size() && ib < b.size()) {
        if (a[ia] <= b[ib])
            ++ia;
        else
            ++ib;
        d = std::max(d, std::fabs(ia / na - ib / nb));
    }
    return d;
}

double required_power(const model::SystemConfig &cfg,
                      const std::vector<double> &beta, int user_k,
                      double target_rate, analytics::RateMethod method,
                      int home_cell, double tol) {
    auto rate_at = [&](double p_r) {
        model::SystemConfig c = cfg;
        c.uplink_power = p_r;
        const model::FadingProfile prof(c, beta);
        const analytics::SinrLaw law =
            analytics::sinr_law(c, prof, user_k, home_cell);
        switch (method) {
        case analytics::RateMethod::exact: {
            const auto r = analytics::ergodic_rate_exact(law);
            return r.cancellation ? analytics::ergodic_rate_quadrature(law)
                                  : r.bits_per_sym;
        }
        case analytics::RateMethod::bound:
            return analytics::rate_lower_bound(law);
        default:
            return analytics::ergodic_rate_quadrature(law);
        }
    };
    // feasibility against the infinite-power ceiling
    {
        model::SystemConfig c = cfg;
        c.uplink_power = 1e9;
        const model::FadingProfile prof(c, beta);
        const analytics::SinrLaw law =
            analytics::sinr_law(c, prof, user_k, home_cell);
        const double ceiling = analytics::ceiling_rate(law);
        if (target_rate >= ceiling)
            throw std::runtime_error(
                "required_power: target " + std::to_string(target_rate) +
                " bits/s/Hz is not achievable; the infinite-power ceiling is " +
                std::to_string(ceiling) + " bits/s/Hz");
    }
    double lo = 1e-6, hi = 1e6;
    if (rate_at(lo) >= target_rate) return lo;
    if (rate_at(hi) < target_rate)
        throw std::runtime_error("required_power: target not reached at the "
                                 "upper power bracket 1e6");
    while (true) {
        const double mid = std::sqrt(lo * hi); // bisect in log space
        const double r = rate_at(mid);
        if (std::fabs(r - target_rate) < tol) return mid;
        (r < target_rate ? lo : hi) = mid;
        if (hi / lo < 1.0 + 1e-12) return mid;
    }
}

} // namespace zfaging::sim
