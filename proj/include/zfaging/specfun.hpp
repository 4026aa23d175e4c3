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

#include "zfaging/extended.hpp"

namespace zfaging::specfun {

/// Bessel function of the first kind, order zero.
///
/// Evaluated as (2/pi) * int_0^{pi/2} cos(x sin t) dt with a fixed-order
/// Gauss-Legendre rule whose order grows with |x|; absolute error is below
/// 1e-13 for |x| <= 50 and stays at machine-noise level well beyond that.
/// Throws std::domain_error on non-finite input.
double bessel_j0(double x);

/// Exponential integral Ei(x) for strictly negative arguments.
///
/// Only the negative branch occurs in the closed forms handled here, so
/// x >= 0 throws std::domain_error. Relative error < 1e-13.
double exp_integral_ei(double x);

/// Upper incomplete gamma function Gamma(a, x), a > 0, x >= 0.
/// Series / continued-fraction evaluation, relative error < 1e-12.
double upper_incomplete_gamma(double a, double x);

/// Regularized upper gamma Q(a, x) = Gamma(a, x) / Gamma(a).
double regularized_gamma_q(double a, double x);

/// Confluent hypergeometric function of the second kind U(a, b, z),
/// a > 0, z > 0, by adaptive quadrature of the defining integral
///   U(a,b,z) = 1/Gamma(a) int_0^inf e^{-zt} t^{a-1} (1+t)^{b-a-1} dt.
/// Accuracy is controlled by the relative tolerance; non-convergence after
/// the refinement budget raises quad::QuadratureError with diagnostics.
double tricomi_u(double a, double b, double z, double rel_tol = 1e-10);

/// Result of the exponential-integral moment sum.
struct JResult {
    double value = 0.0;
    /// set when |value| < 1e-9 * max term magnitude; the caller should not
    /// trust the leading digits and is expected to fall back to quadrature
    bool cancellation = false;
    /// max |term| / |value|, a rough condition estimate of the signed sum
    double condition = 1.0;
};

/// The finite closed form of
///   J_{m,n}(a, b, alpha) = int_0^inf y^m (a y + b)^n e^{-alpha y}
///                          Ei(-(a y + b)) dy
/// for integer m, n >= 0, a > 0, b > 0 and alpha > -a, alpha != 0 (the
/// integral converges for alpha > -a; alpha < 0 does occur in the rate
/// expressions). Terms are evaluated in quad precision and accumulated in
/// order of increasing magnitude; severe cancellation is flagged rather
/// than hidden.
JResult j_function(int m, int n, double a, double b, double alpha);

/// log(n!) — exact table below 21!, lgamma above.
double log_factorial(int n);
/// log of the binomial coefficient C(n, k).
double log_binomial(int n, int k);

namespace detail {

// Quad-precision primitives shared with the analytic rate/outage assembly.
// All are numerically "scaled": the exponentially large/small factors are
// folded analytically so values stay representable.

/// e^x E1(x) for x > 0 (decays like 1/x; never overflows).
qfloat e1_scaled_q(qfloat x);

/// e^w Gamma(s, w) for integer s >= 1: equals (s-1)! sum_{u<s} w^u/u!.
qfloat upper_gamma_scaled_int_q(int s, qfloat w);

/// e^{b(1+lambda)} * G_nu(lambda, b) where
///   G_nu(lambda, b) = int_b^inf x^nu e^{-lambda x} Ei(-x) dx.
/// Records the largest constituent |term| in *max_term when non-null.
qfloat ebg_q(int nu, qfloat lambda, qfloat b, qfloat *max_term = nullptr);

/// e^b * J_{m,n}(a, b, alpha); tracks max |term| for cancellation checks.
qfloat ebj_q(int m, int n, qfloat a, qfloat b, qfloat alpha,
             qfloat *max_term = nullptr);

} // namespace detail

} // namespace zfaging::specfun
