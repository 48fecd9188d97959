// Copyright (c) 2026 the larmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace larmor {

/// Seeded random stream with a fully pinned-down mapping to doubles. The
/// mt19937_64 sequence is fixed by the language standard and the mapping
/// below uses only bit shifts, so identical seeds give identical samples
/// on every platform. std::uniform_real_distribution is avoided on
/// purpose: its output is implementation-defined.
class SampleStream {
public:
    explicit SampleStream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    /// Magnitude 10^u with u uniform in [lo_exp, hi_exp).
    double log_uniform_magnitude(double lo_exp, double hi_exp) {
        return std::pow(10.0, uniform(lo_exp, hi_exp));
    }

    /// +1 or -1 with equal probability.
    double random_sign() { return (engine_() & 1u) ? 1.0 : -1.0; }

private:
    std::mt19937_64 engine_;
};

}  // namespace larmor
