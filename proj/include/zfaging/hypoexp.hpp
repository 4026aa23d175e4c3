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

#include <span>
#include <vector>

#include "zfaging/extended.hpp"

namespace zfaging::specfun {

/// Erlang distribution with integer shape and real scale.
struct ErlangLaw {
    int shape = 1;      ///< >= 1
    double scale = 1.0; ///< > 0
};

double erlang_pdf(const ErlangLaw &law, double x);
/// CDF as the truncated exponential sum 1 - e^{-x/s} sum_{t<shape} (x/s)^t/t!.
double erlang_cdf(const ErlangLaw &law, double x);
/// E[1/X] = 1/((shape-1) scale); requires shape >= 2 (divergent otherwise).
double erlang_inverse_mean(const ErlangLaw &law);

/// Spectral description of a hypoexponential law: the distinct means of the
/// summed exponentials (decreasing), their multiplicities, and the
/// partial-fraction ("characteristic") coefficients of the moment
/// generating function prod_p (1 - mu_p s)^{-tau_p}.
///
/// The coefficients are kept in quad precision: their magnitudes reach
/// 1e10..1e15 on near-degenerate spectra while all reconstructed quantities
/// are O(1), so double storage would destroy the densities built from them.
struct SpectralData {
    std::vector<double> eigenvalues;   ///< distinct means, strictly decreasing
    std::vector<int> multiplicities;   ///< tau_p >= 1
    std::vector<std::vector<qfloat>> coeffs; ///< coeffs[p][q-1] = X_{p,q}
    int source_size = 0;               ///< length of the source diagonal
    double source_sum = 0.0;           ///< trace of the source diagonal

    int distinct_count() const { return static_cast<int>(eigenvalues.size()); }
    /// X_{p,q} rounded to double (diagnostics; use coeffs for arithmetic)
    double coeff(int p, int q) const { return qf::to_double(coeffs[p][q - 1]); }
};

/// Partial-fraction coefficients of the hypoexponential MGF for the given
/// diagonal of exponential means. Entries equal within relative 1e-12 are
/// merged into one eigenvalue; multiplicities > 1 are handled by the Taylor
/// recursion on the logarithmic derivative of the reduced MGF.
/// Throws std::domain_error for an empty list or non-positive entries.
SpectralData characteristic_coefficients(std::span<const double> diagonal);

/// Hypoexponential density sum_p sum_q X_{p,q} mu^{-q}/(q-1)! y^{q-1}
/// e^{-y/mu}; y >= 0. Assembled in quad precision, clamped at zero.
double hypoexp_pdf(const SpectralData &spec, double y);

/// Mean sum_p sum_q X_{p,q} q mu_{p}; equals the trace of the source
/// diagonal (the identity the coefficients are pinned to).
double hypoexp_mean(const SpectralData &spec);

} // namespace zfaging::specfun
