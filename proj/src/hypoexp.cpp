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

#include "zfaging/hypoexp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zfaging/specfun.hpp"

namespace zfaging::specfun {

namespace {

void require(bool cond, const char *msg) {
    if (!cond) throw std::domain_error(msg);
}

} // namespace

double erlang_pdf(const ErlangLaw &law, double x) {
    require(law.shape >= 1 && law.scale > 0.0, "erlang_pdf: invalid law");
    require(x >= 0.0, "erlang_pdf: requires x >= 0");
    if (x == 0.0) return law.shape == 1 ? 1.0 / law.scale : 0.0;
    const double r = x / law.scale;
    const double lg = (law.shape - 1) * std::log(r) - r -
                      log_factorial(law.shape - 1) - std::log(law.scale);
    return std::exp(lg);
}

double erlang_cdf(const ErlangLaw &law, double x) {
    require(law.shape >= 1 && law.scale > 0.0, "erlang_cdf: invalid law");
    require(x >= 0.0, "erlang_cdf: requires x >= 0");
    if (x == 0.0) return 0.0;
    const double r = x / law.scale;
    double tail = 0.0;
    for (int t = 0; t < law.shape; ++t) {
        const double lt = t * std::log(r) - r - log_factorial(t);
        if (lt > -745.0) tail += std::exp(lt);
    }
    return std::min(1.0, std::max(0.0, 1.0 - tail));
}

double erlang_inverse_mean(const ErlangLaw &law) {
    require(law.scale > 0.0, "erlang_inverse_mean: invalid scale");
    if (law.shape < 2)
        throw std::domain_error(
            "erlang_inverse_mean: diverges for shape 1 (N = K configuration)");
    return 1.0 / ((law.shape - 1) * law.scale);
}

SpectralData characteristic_coefficients(std::span<const double> diagonal) {
    require(!diagonal.empty(), "characteristic_coefficients: empty diagonal");
    for (double d : diagonal)
        require(d > 0.0 && std::isfinite(d),
                "characteristic_coefficients: entries must be positive");

    std::vector<double> sorted(diagonal.begin(), diagonal.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());

    SpectralData spec;
    spec.source_size = static_cast<int>(sorted.size());
    for (double v : sorted) {
        spec.source_sum += v;
        if (!spec.eigenvalues.empty() &&
            std::fabs(v - spec.eigenvalues.back()) <=
                1e-12 * std::max(std::fabs(v), std::fabs(spec.eigenvalues.back()))) {
            ++spec.multiplicities.back();
        } else {
            spec.eigenvalues.push_back(v);
            spec.multiplicities.push_back(1);
        }
    }

    const int P = spec.distinct_count();
    spec.coeffs.resize(P);
    for (int p = 0; p < P; ++p) {
        const int tp = spec.multiplicities[p];
        const int nmax = tp - 1;
        const qfloat mu_p = spec.eigenvalues[p];
        // Taylor expansion of Phi_p(w) = prod_{i != p} (c_i + d_i w)^{-tau_i}
        // (with c_i = 1 - mu_i/mu_p, d_i = mu_i/mu_p) around w = 0; the
        // (p, q) coefficient is the Taylor coefficient of order tau_p - q.
        std::vector<qfloat> g(nmax + 1, 0), h(nmax + 1, 0);
        qfloat h0 = 1;
        for (int i = 0; i < P; ++i) {
            if (i == p) continue;
            const qfloat ratio = qfloat(spec.eigenvalues[i]) / mu_p;
            const qfloat ci = 1 - ratio;
            h0 *= qf::powi(ci, -spec.multiplicities[i]);
            // log-derivative Taylor coefficients (exact formal algebra;
            // validity does not depend on the series radius)
            qfloat pw = 1; // (d_i/c_i)^j
            for (int j = 1; j <= nmax; ++j) {
                pw *= ratio / ci;
                const qfloat sign = (j % 2 == 0) ? qfloat(1) : qfloat(-1);
                g[j] += qfloat(spec.multiplicities[i]) * sign / qfloat(j) * pw;
            }
        }
        h[0] = h0;
        for (int n = 1; n <= nmax; ++n) {
            qfloat acc = 0;
            for (int j = 1; j <= n; ++j) acc += qfloat(j) * g[j] * h[n - j];
            h[n] = acc / qfloat(n);
        }
        spec.coeffs[p].resize(tp);
        for (int q = 1; q <= tp; ++q) spec.coeffs[p][q - 1] = h[tp - q];
    }
    return spec;
}

double hypoexp_pdf(const SpectralData &spec, double y) {
    require(y >= 0.0, "hypoexp_pdf: requires y >= 0");
    qfloat acc = 0;
    for (int p = 0; p < spec.distinct_count(); ++p) {
        const qfloat mu = spec.eigenvalues[p];
        const qfloat decay = qf::exp(-qfloat(y) / mu);
        qfloat base = decay / mu; // mu^{-q} y^{q-1} / (q-1)! e^{-y/mu} at q=1
        for (int q = 1; q <= spec.multiplicities[p]; ++q) {
            acc += spec.coeffs[p][q - 1] * base;
            base *= qfloat(y) / (mu * q);
        }
    }
    return std::max(0.0, qf::to_double(acc));
}

double hypoexp_mean(const SpectralData &spec) {
    qfloat acc = 0;
    for (int p = 0; p < spec.distinct_count(); ++p)
        for (int q = 1; q <= spec.multiplicities[p]; ++q)
            acc += spec.coeffs[p][q - 1] * qfloat(q) * qfloat(spec.eigenvalues[p]);
    return qf::to_double(acc);
}

} // namespace zfaging::specfun
