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
#include <random>

#include "zfaging/quadrature.hpp"
#include "zfaging/specfun.hpp"

using namespace zfaging;
using namespace zfaging::specfun;

namespace {

// power-series oracle for J0, accurate in double up to |x| ~ 12
double j0_series(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 80; ++k) {
        term *= -q / (static_cast<double>(k) * k);
        sum += term;
        if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    }
    return sum;
}

// quadrature oracle for E1 on z >= 1: direct integral of e^{-t}/t
double e1_quad(double z) {
    auto f = [z](double u) {
        const double t = z + u;
        return std::exp(-t) / t;
    };
    return quad::integrate_semi_inf(f, 1e-16).value;
}

} // namespace

TEST_CASE("bessel_j0 special points") {
    CHECK(bessel_j0(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(bessel_j0(1.0) ==
          doctest::Approx(0.765197686557966551).epsilon(1e-14));
    CHECK(std::fabs(bessel_j0(2.40482555769577277)) < 1e-13);
    CHECK(std::fabs(bessel_j0(2.4048255577)) < 1e-8);
    CHECK(bessel_j0(-7.5) == doctest::Approx(bessel_j0(7.5)).epsilon(1e-15));
    CHECK_THROWS_AS(bessel_j0(NAN), std::domain_error);
    CHECK_THROWS_AS(bessel_j0(INFINITY), std::domain_error);
}

TEST_CASE("bessel_j0 matches the series oracle on random points") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> u(-12.0, 12.0);
    for (int i = 0; i < 100; ++i) {
        const double x = u(gen);
        CHECK(std::fabs(bessel_j0(x) - j0_series(x)) < 1e-13);
    }
}

TEST_CASE("bessel_j0 matches an adaptive-quadrature oracle up to |x| = 50") {
    std::mt19937_64 gen(8);
    std::uniform_real_distribution<double> u(12.0, 50.0);
    for (int i = 0; i < 100; ++i) {
        const double x = u(gen);
        auto f = [x](double t) { return std::cos(x * std::sin(t)); };
        const double oracle =
            (2.0 / M_PI) * quad::integrate(f, 0.0, 0.5 * M_PI, 1e-14).value;
        CHECK(std::fabs(bessel_j0(x) - oracle) < 1e-12);
    }
}

TEST_CASE("exponential integral on the negative axis") {
    CHECK(exp_integral_ei(-1.0) ==
          doctest::Approx(-0.219383934395520274).epsilon(1e-12));
    CHECK(exp_integral_ei(-0.1) ==
          doctest::Approx(-1.82292395841939067).epsilon(1e-12));
    CHECK(exp_integral_ei(-25.0) ==
          doctest::Approx(-5.34889975534021664e-13).epsilon(1e-12));
    // asymptotic envelope at -50
    CHECK(std::fabs(exp_integral_ei(-50.0)) < std::exp(-50.0) / 50.0 * 1.05);
    CHECK_THROWS_AS(exp_integral_ei(0.0), std::domain_error);
    CHECK_THROWS_AS(exp_integral_ei(1.0), std::domain_error);
    CHECK_THROWS_AS(exp_integral_ei(NAN), std::domain_error);
}

TEST_CASE("exponential integral matches quadrature oracle on random points") {
    std::mt19937_64 gen(9);
    std::uniform_real_distribution<double> u(1.0, 30.0);
    for (int i = 0; i < 100; ++i) {
        const double z = u(gen);
        const double mine = -exp_integral_ei(-z); // E1(z)
        const double oracle = e1_quad(z);
        CHECK(mine == doctest::Approx(oracle).epsilon(1e-10));
    }
}

TEST_CASE("upper incomplete gamma") {
    // Gamma(1, x) = e^{-x}
    for (double x : {0.2, 1.0, 5.0, 30.0})
        CHECK(upper_incomplete_gamma(1.0, x) ==
              doctest::Approx(std::exp(-x)).epsilon(1e-12));
    // Gamma(a, 0) = Gamma(a)
    for (double a : {0.7, 1.0, 3.5, 11.0})
        CHECK(upper_incomplete_gamma(a, 0.0) ==
              doctest::Approx(std::tgamma(a)).epsilon(1e-12));
    // recurrence at (3, 2): Gamma(a+1,x) = a Gamma(a,x) + x^a e^{-x}
    const double a = 3.0, x = 2.0;
    CHECK(upper_incomplete_gamma(a + 1.0, x) ==
          doctest::Approx(a * upper_incomplete_gamma(a, x) +
                          std::pow(x, a) * std::exp(-x))
              .epsilon(1e-12));
    CHECK(upper_incomplete_gamma(3.0, 2.0) ==
          doctest::Approx(1.35335283236612692).epsilon(1e-12));
    CHECK(upper_incomplete_gamma(5.5, 4.2) ==
          doctest::Approx(35.4406322006670792).epsilon(1e-12));
    CHECK_THROWS_AS(upper_incomplete_gamma(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(upper_incomplete_gamma(-2.0, 1.0), std::domain_error);
}

TEST_CASE("upper incomplete gamma matches quadrature oracle on random points") {
    std::mt19937_64 gen(10);
    std::uniform_real_distribution<double> ua(0.3, 20.0), ux(0.0, 25.0);
    for (int i = 0; i < 100; ++i) {
        const double a = ua(gen), x = ux(gen);
        auto f = [a, x](double u) {
            const double t = x + u;
            return std::exp((a - 1.0) * std::log(t) - t);
        };
        const double oracle = quad::integrate_semi_inf(f, 1e-13).value;
        CHECK(upper_incomplete_gamma(a, x) ==
              doctest::Approx(oracle).epsilon(1e-9));
    }
}

TEST_CASE("tricomi U identities") {
    // U(1, b, z) = e^z z^{1-b} Gamma(b-1, z)
    for (int b = 2; b <= 8; ++b)
        for (double z : {0.1, 1.0, 10.0}) {
            const double expect = std::exp(z) * std::pow(z, 1.0 - b) *
                                  upper_incomplete_gamma(b - 1.0, z);
            CHECK(tricomi_u(1.0, b, z) ==
                  doctest::Approx(expect).epsilon(1e-8));
        }
    // U(a, a+1, z) = z^{-a}
    for (double a : {0.5, 1.0, 2.5, 6.0})
        for (double z : {0.4, 2.0, 9.0})
            CHECK(tricomi_u(a, a + 1.0, z) ==
                  doctest::Approx(std::pow(z, -a)).epsilon(1e-8));
    CHECK(tricomi_u(2.0, 5.0, 1.5) ==
          doctest::Approx(2.81481481481481481).epsilon(1e-8));
    CHECK_THROWS_AS(tricomi_u(-1.0, 2.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(tricomi_u(1.0, 2.0, 0.0), std::domain_error);
}

TEST_CASE("tricomi U is stable under refinement doubling") {
    const double coarse = tricomi_u(2.0, 5.0, 1.5, 1e-8);
    const double fine = tricomi_u(2.0, 5.0, 1.5, 1e-10);
    CHECK(std::fabs(coarse - fine) / std::fabs(fine) < 1e-8);
}

TEST_CASE("j_function frozen oracle values") {
    // values computed from the defining integral at 40-digit precision
    struct Case {
        int m, n;
        double a, b, alpha, expect;
    };
    const Case cases[] = {
        {1, 2, 0.5, 0.3, 1.2, -0.134534016860459186},
        {0, 0, 2.0, 1.0, 0.7, -0.0591556578237089124},
        {2, 3, 1.98, 1.98, -0.07, -1.00351335641320466},
        {3, 5, 35.0, 35.0, -33.0, -5.33843687575008448e-8},
        {2, 4, 1.1, 4.0, 2.5, -0.082503042997464932},
        {0, 3, 1.5, 2.0, 0.4, -0.47312866983300562},
    };
    for (const auto &c : cases) {
        const JResult r = j_function(c.m, c.n, c.a, c.b, c.alpha);
        CHECK(std::isfinite(r.value));
        CHECK(r.value == doctest::Approx(c.expect).epsilon(1e-9));
    }
}

TEST_CASE("j_function at m = n = 0 equals the hand-expanded two-term form") {
    // J_{0,0}(a, b, alpha) = (1/alpha) [Ei(-b) - e^{alpha b / a}
    //                                   Ei(-b - alpha b / a)]
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> ua(0.2, 5.0), ub(0.1, 4.0),
        ual(0.1, 3.0);
    for (int i = 0; i < 50; ++i) {
        const double a = ua(gen), b = ub(gen), al = ual(gen);
        const double expect =
            (exp_integral_ei(-b) -
             std::exp(al * b / a) * exp_integral_ei(-b - al * b / a)) /
            al;
        CHECK(j_function(0, 0, a, b, al).value ==
              doctest::Approx(expect).epsilon(1e-11));
    }
}

TEST_CASE("j_function domain errors") {
    CHECK_THROWS_AS(j_function(-1, 0, 1.0, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(j_function(0, 0, -1.0, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(j_function(0, 0, 1.0, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(j_function(0, 0, 1.0, 1.0, 0.0), std::domain_error);
    // divergent integral: alpha <= -a
    CHECK_THROWS_AS(j_function(0, 0, 1.0, 1.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(j_function(0, 0, 1.0, NAN, 1.0), std::domain_error);
}

TEST_CASE("log factorial helpers") {
    CHECK(log_factorial(0) == 0.0);
    CHECK(log_factorial(5) == doctest::Approx(std::log(120.0)).epsilon(1e-15));
    CHECK(log_factorial(40) ==
          doctest::Approx(std::lgamma(41.0)).epsilon(1e-15));
    CHECK(log_binomial(10, 3) == doctest::Approx(std::log(120.0)).epsilon(1e-13));
    CHECK_THROWS_AS(log_binomial(3, 5), std::domain_error);
}
