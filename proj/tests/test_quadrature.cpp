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

#include <doctest.h>

#include <cmath>

#include "zfaging/quadrature.hpp"

using namespace zfaging;

TEST_CASE("exponential moments over the half line") {
    auto r0 = quad::integrate_semi_inf([](double x) { return std::exp(-x); }, 1e-10);
    CHECK(r0.value == doctest::Approx(1.0).epsilon(1e-9));
    auto r2 = quad::integrate_semi_inf(
        [](double x) { return x * x * std::exp(-x); }, 1e-10);
    CHECK(r2.value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("finite interval and Gauss-Legendre agree") {
    auto f = [](double x) { return std::sin(x); };
    CHECK(quad::integrate(f, 0.0, M_PI, 1e-12).value ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(quad::integrate_gl(f, 0.0, M_PI, 48) ==
          doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("self-convergence under tolerance halving") {
    // a moderately awkward integrand: sharp peak off-center
    auto f = [](double x) { return std::exp(-50.0 * (x - 0.3) * (x - 0.3)); };
    const double a = quad::integrate(f, 0.0, 4.0, 1e-8).value;
    const double b = quad::integrate(f, 0.0, 4.0, 5e-9).value;
    CHECK(std::fabs(a - b) < 1e-8);
}

TEST_CASE("budget exhaustion reports the best estimate") {
    // integrable endpoint singularity with an unrealistically tight budget
    auto f = [](double x) { return 1.0 / std::sqrt(x); };
    try {
        quad::integrate(f, 1e-300, 1.0, 1e-14, 8);
        FAIL("expected QuadratureError");
    } catch (const quad::QuadratureError &e) {
        CHECK(std::isfinite(e.best_estimate));
        CHECK(e.error_bound > 1e-14);
    }
}

TEST_CASE("Gauss-Legendre nodes are symmetric and normalized") {
    const auto &rule = quad::gauss_legendre(33);
    double wsum = 0.0;
    for (double w : rule.weights) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    for (size_t i = 0; i < rule.nodes.size() / 2; ++i)
        CHECK(rule.nodes[i] ==
              doctest::Approx(-rule.nodes[rule.nodes.size() - 1 - i]).epsilon(1e-14));
}
