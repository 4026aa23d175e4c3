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

#include <quadmath.h>

#include <cmath>
#include <cstdint>

namespace zfaging {

// Extended-precision scalar used for the partial-fraction assemblies.
//
// The characteristic coefficients of the interference spectrum reach
// magnitudes of 1e10..1e15 on the symmetric multi-cell scenario while the
// reconstructed densities, rates and outage probabilities are O(1) or
// smaller, so every signed sum over those coefficients loses
// log10(max|coeff|) digits. 80-bit long double leaves too little headroom
// for the small-outage regime; 113-bit quad precision keeps ~18 digits
// after cancellation.
using qfloat = __float128;

namespace qf {

inline qfloat abs(qfloat x) { return fabsq(x); }
inline qfloat exp(qfloat x) { return expq(x); }
inline qfloat log(qfloat x) { return logq(x); }
inline qfloat pow(qfloat x, qfloat y) { return powq(x, y); }
inline qfloat sqrt(qfloat x) { return sqrtq(x); }
inline qfloat lgamma(qfloat x) { return lgammaq(x); }
inline qfloat tgamma(qfloat x) { return tgammaq(x); }
inline double to_double(qfloat x) { return static_cast<double>(x); }

// x^n for integer n, by squaring; n may be negative.
inline qfloat powi(qfloat x, long n) {
    if (n < 0) return qfloat(1) / powi(x, -n);
    qfloat r = 1, b = x;
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

inline qfloat factorial(int n) {
    static const int kTab = 40;
    static qfloat tab[kTab];
    static bool init = false;
    if (!init) {
        tab[0] = 1;
        for (int i = 1; i < kTab; ++i) tab[i] = tab[i - 1] * i;
        init = true;
    }
    if (n < kTab) return tab[n];
    return tgammaq(qfloat(n) + 1);
}

inline qfloat binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    if (n < 40) {
        qfloat r = 1;
        for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
        return r;
    }
    return expq(lgammaq(qfloat(n) + 1) - lgammaq(qfloat(k) + 1) -
                lgammaq(qfloat(n - k) + 1));
}

} // namespace qf
} // namespace zfaging
