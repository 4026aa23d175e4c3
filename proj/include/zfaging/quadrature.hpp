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

#include <functional>
#include <stdexcept>
#include <vector>

namespace zfaging::quad {

/// Thrown when an adaptive rule exhausts its refinement budget. Carries the
/// best estimate so callers can decide whether to accept it anyway.
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(const std::string &msg, double best, double err)
        : std::runtime_error(msg), best_estimate(best), error_bound(err) {}
    double best_estimate;
    double error_bound;
};

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0; ///< conservative absolute error bound
    long evaluations = 0;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (G7,K15) integration of f on the finite interval
/// [lo, hi] to absolute tolerance abs_tol. Throws QuadratureError if the
/// interval budget is exhausted before the tolerance is met.
QuadResult integrate(const Integrand &f, double lo, double hi, double abs_tol,
                     int max_intervals = 4000);

/// Integration over [0, inf) via the rational map x = t/(1-t).
QuadResult integrate_semi_inf(const Integrand &f, double abs_tol,
                              int max_intervals = 4000);

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
/// Computed by Newton iteration on the Legendre recurrence and cached.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussLegendre &gauss_legendre(int n);

/// Fixed-order Gauss-Legendre estimate of f over [lo, hi].
double integrate_gl(const Integrand &f, double lo, double hi, int n);

} // namespace zfaging::quad
