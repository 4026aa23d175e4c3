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

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace zfaging::sim {

/// Worker count: ZFAGING_WORKERS when set, available parallelism otherwise.
inline int worker_count() {
    if (const char *env = std::getenv("ZFAGING_WORKERS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

/// Run fn(first, last) over a static partition of [0, n). Results must be
/// written to disjoint, preallocated storage; any reduction happens after
/// the join, in index order, so outputs do not depend on the worker count.
inline void parallel_for(int64_t n,
                         const std::function<void(int64_t, int64_t)> &fn) {
    const int workers = std::min<int64_t>(worker_count(), std::max<int64_t>(n, 1));
    if (workers <= 1 || n < 2) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const int64_t chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int64_t lo = w * chunk;
        const int64_t hi = std::min<int64_t>(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto &t : pool) t.join();
}

} // namespace zfaging::sim
