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

#include "zfaging/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <queue>

namespace zfaging::quad {

namespace {

// Kronrod 15-point nodes/weights with embedded Gauss 7-point rule.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469};

struct Interval {
    double lo, hi, value, error;
    bool operator<(const Interval &o) const { return error < o.error; }
};

Interval eval_gk15(const Integrand &f, double lo, double hi) {
    const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    const double fc = f(c);
    double res_g = fc * kWg[3];
    double res_k = fc * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double x = h * kXgk[j];
        const double f1 = f(c - x), f2 = f(c + x);
        res_k += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) res_g += kWg[j / 2] * (f1 + f2);
    }
    res_k *= h;
    res_g *= h;
    const double diff = std::fabs(res_k - res_g);
    // standard QUADPACK-style error sharpening
    const double err = diff > 0 ? diff * std::min(1.0, std::pow(200.0 * diff, 1.5))
                                : 0.0;
    return {lo, hi, res_k, std::max(err, diff * 1e-6)};
}

} // namespace

QuadResult integrate(const Integrand &f, double lo, double hi, double abs_tol,
                     int max_intervals) {
    if (!(lo < hi)) return {0.0, 0.0, 0};
    std::priority_queue<Interval> heap;
    Interval whole = eval_gk15(f, lo, hi);
    heap.push(whole);
    double total = whole.value, total_err = whole.error;
    long evals = 15;
    int n = 1;
    while (total_err > abs_tol && n < max_intervals) {
        Interval worst = heap.top();
        heap.pop();
        total -= worst.value;
        total_err -= worst.error;
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) {
            // interval at machine resolution; keep its estimate
            total += worst.value;
            total_err += worst.error;
            break;
        }
        Interval a = eval_gk15(f, worst.lo, mid);
        Interval b = eval_gk15(f, mid, worst.hi);
        evals += 30;
        ++n;
        total += a.value + b.value;
        total_err += a.error + b.error;
        heap.push(a);
        heap.push(b);
    }
    if (total_err > abs_tol)
        throw QuadratureError("adaptive quadrature: interval budget exhausted "
                              "(error bound " + std::to_string(total_err) +
                              " > tol " + std::to_string(abs_tol) + ")",
                              total, total_err);
    return {total, total_err, evals};
}

QuadResult integrate_semi_inf(const Integrand &f, double abs_tol,
                              int max_intervals) {
    auto g = [&f](double t) {
        const double om = 1.0 - t;
        const double x = t / om;
        return f(x) / (om * om);
    };
    // stop a hair short of t=1; the Jacobian diverges there and any
    // integrable f vanishes fast enough for the remainder to be negligible
    return integrate(g, 0.0, 1.0 - 1e-14, abs_tol, max_intervals);
}

const GaussLegendre &gauss_legendre(int n) {
    static std::map<int, GaussLegendre> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    GaussLegendre rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Chebyshev initial guess, Newton on P_n
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double p0, p1, dp;
        for (int iter = 0; iter < 100; ++iter) {
            p0 = 1.0;
            p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    auto [pos, ok] = cache.emplace(n, std::move(rule));
    return pos->second;
}

double integrate_gl(const Integrand &f, double lo, double hi, int n) {
    const GaussLegendre &r = gauss_legendre(n);
    const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += r.weights[i] * f(c + h * r.nodes[i]);
    return acc * h;
}

} // namespace zfaging::quad
