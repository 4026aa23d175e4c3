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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "zfaging/hypoexp.hpp"
#include "zfaging/quadrature.hpp"
#include "zfaging/rng.hpp"

using namespace zfaging;
using namespace zfaging::specfun;

namespace {

double pdf_integral(const SpectralData &spec) {
    double hi = 0.0, hiv = 0.0;
    for (size_t p = 0; p < spec.eigenvalues.size(); ++p) {
        hi += spec.eigenvalues[p] * spec.multiplicities[p];
        hiv += spec.eigenvalues[p] * spec.eigenvalues[p] * spec.multiplicities[p];
    }
    hi += 14.0 * std::sqrt(hiv) + 40.0 * spec.eigenvalues.front();
    return quad::integrate([&](double y) { return hypoexp_pdf(spec, y); }, 0.0,
                           hi, 1e-10)
        .value;
}

} // namespace

TEST_CASE("pure Erlang stack [2,2,2]") {
    const std::vector<double> d{2.0, 2.0, 2.0};
    const SpectralData s = characteristic_coefficients(d);
    REQUIRE(s.distinct_count() == 1);
    CHECK(s.eigenvalues[0] == 2.0);
    CHECK(s.multiplicities[0] == 3);
    CHECK(s.coeff(0, 3) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.coeff(0, 1) == doctest::Approx(0.0));
    CHECK(s.coeff(0, 2) == doctest::Approx(0.0));
}

TEST_CASE("two distinct exponentials [2,1]") {
    const std::vector<double> d{2.0, 1.0};
    const SpectralData s = characteristic_coefficients(d);
    REQUIRE(s.distinct_count() == 2);
    CHECK(s.coeff(0, 1) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(s.coeff(1, 1) == doctest::Approx(-1.0).epsilon(1e-14));
    // density e^{-y/2} - e^{-y}
    CHECK(hypoexp_pdf(s, 0.0) == doctest::Approx(0.0));
    for (double y : {0.3, 1.0, 4.0})
        CHECK(hypoexp_pdf(s, y) ==
              doctest::Approx(std::exp(-y / 2) - std::exp(-y)).epsilon(1e-13));
    CHECK(hypoexp_mean(s) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("single exponential reduces to its density") {
    const std::vector<double> d{0.7};
    const SpectralData s = characteristic_coefficients(d);
    for (double y : {0.0, 0.5, 2.0})
        CHECK(hypoexp_pdf(s, y) ==
              doctest::Approx(std::exp(-y / 0.7) / 0.7).epsilon(1e-14));
    CHECK(hypoexp_mean(s) == doctest::Approx(0.7).epsilon(1e-15));
}

TEST_CASE("normalization and trace identity" *
          doctest::description("pdf integrates to 1, mean equals trace")) {
    const std::vector<std::vector<double>> diags = {
        {3.0, 3.0, 1.0},
        {3.0, 3.0, 1.0, 0.5},
        {0.52352941176470591, 0.52352941176470591, 0.095235294117647067},
    };
    for (const auto &d : diags) {
        const SpectralData s = characteristic_coefficients(d);
        double trace = 0.0;
        for (double v : d) trace += v;
        CHECK(pdf_integral(s) == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(hypoexp_mean(s) == doctest::Approx(trace).epsilon(1e-10));
    }
    // [3,3,1] mean is exactly 7
    const SpectralData s = characteristic_coefficients(std::vector<double>{3, 3, 1});
    CHECK(hypoexp_mean(s) == doctest::Approx(7.0).epsilon(1e-10));
}

TEST_CASE("random spectra: invariants hold including clustered eigenvalues") {
    std::mt19937_64 gen(21);
    std::uniform_real_distribution<double> u(0.05, 4.0);
    std::uniform_int_distribution<int> size(1, 8), rep(1, 4);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> d;
        const int ns = size(gen);
        for (int i = 0; i < ns; ++i) {
            const double v = u(gen);
            const int r = rep(gen);
            for (int j = 0; j < r; ++j) d.push_back(v);
        }
        const SpectralData s = characteristic_coefficients(d);
        double trace = 0.0;
        for (double v : d) trace += v;
        CHECK(pdf_integral(s) == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(hypoexp_mean(s) == doctest::Approx(trace).epsilon(1e-10));
    }
}

TEST_CASE("distinct coefficients match the product formula") {
    std::mt19937_64 gen(22);
    std::uniform_real_distribution<double> u(0.1, 5.0);
    std::vector<double> d;
    for (int i = 0; i < 7; ++i) d.push_back(u(gen) + 0.6 * i); // well separated
    const SpectralData s = characteristic_coefficients(d);
    REQUIRE(s.distinct_count() == 7);
    for (int p = 0; p < 7; ++p) {
        double prod = 1.0;
        for (int q = 0; q < 7; ++q) {
            if (q == p) continue;
            prod /= 1.0 - s.eigenvalues[q] / s.eigenvalues[p];
        }
        CHECK(s.coeff(p, 1) == doctest::Approx(prod).epsilon(1e-12));
    }
}

TEST_CASE("near-equal entries merge at relative 1e-12") {
    const double v = 1.2345678901234567;
    const std::vector<double> d{v, v * (1.0 + 4e-13), 0.5};
    const SpectralData s = characteristic_coefficients(d);
    CHECK(s.distinct_count() == 2);
    CHECK(s.multiplicities[0] == 2);
}

TEST_CASE("hypoexp reconstruction matches Monte Carlo draws [3,3,1]") {
    const std::vector<double> d{3.0, 3.0, 1.0};
    const SpectralData s = characteristic_coefficients(d);
    // empirical CDF of 1e6 sums of exponentials vs the analytic CDF
    const int64_t n = 1000000;
    std::vector<double> samples(n);
    sim::Rng rng(123);
    for (int64_t i = 0; i < n; ++i)
        samples[i] = rng.exponential(3.0) + rng.exponential(3.0) +
                     rng.exponential(1.0);
    std::sort(samples.begin(), samples.end());
    // analytic CDF by quadrature of the density on a grid
    double ks = 0.0;
    double acc = 0.0, prev = 0.0;
    const int grid = 400;
    const double hi = 60.0;
    int64_t idx = 0;
    for (int g = 1; g <= grid; ++g) {
        const double y = hi * g / grid;
        acc += quad::integrate([&](double t) { return hypoexp_pdf(s, t); },
                               prev, y, 1e-10)
                   .value;
        prev = y;
        while (idx < n && samples[idx] <= y) ++idx;
        ks = std::max(ks, std::fabs(acc - static_cast<double>(idx) / n));
    }
    CHECK(ks < 0.005);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(characteristic_coefficients(std::vector<double>{}),
                    std::domain_error);
    CHECK_THROWS_AS(characteristic_coefficients(std::vector<double>{1.0, -2.0}),
                    std::domain_error);
    CHECK_THROWS_AS(characteristic_coefficients(std::vector<double>{0.0}),
                    std::domain_error);
    const SpectralData s = characteristic_coefficients(std::vector<double>{1.0});
    CHECK_THROWS_AS(hypoexp_pdf(s, -0.1), std::domain_error);
}

TEST_CASE("Erlang pdf, cdf, inverse mean") {
    const ErlangLaw e1{1, 0.5};
    for (double x : {0.0, 0.3, 2.0})
        CHECK(erlang_pdf(e1, x) ==
              doctest::Approx(std::exp(-x / 0.5) / 0.5).epsilon(1e-14));
    const ErlangLaw e{11, 0.5882};
    CHECK(erlang_cdf(e, 0.0) == 0.0);
    CHECK(erlang_cdf(e, 1e4) == doctest::Approx(1.0));
    CHECK(erlang_inverse_mean(e) ==
          doctest::Approx(0.170010200612).epsilon(1e-10));
    CHECK_THROWS_AS(erlang_inverse_mean(ErlangLaw{1, 1.0}), std::domain_error);

    // CDF equals the quadrature of the pdf at random points
    std::mt19937_64 gen(23);
    std::uniform_real_distribution<double> u(0.01, 16.0);
    for (int i = 0; i < 20; ++i) {
        const double x = u(gen);
        const double byquad =
            quad::integrate([&](double t) { return erlang_pdf(e, t); }, 0.0, x,
                            1e-11)
                .value;
        CHECK(erlang_cdf(e, x) == doctest::Approx(byquad).epsilon(1e-9));
    }
    // pdf normalization
    const double total =
        quad::integrate([&](double t) { return erlang_pdf(e, t); }, 0.0, 60.0,
                        1e-12)
            .value;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}
