// SPDX-License-Identifier: Apache-2.0
//
// celledge: cell-edge link-level simulator for cell-free massive MIMO and RIS
// Copyright (C) 2026 celledge contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef CELLEDGE_RNG_HPP
#define CELLEDGE_RNG_HPP

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace celledge {

/// Purposes of the independent substreams hanging off a trial seed.
///
/// Every random quantity in a campaign is drawn from a stream keyed by
/// (campaign seed, trial, purpose, ...). Keeping node kinds and channel
/// families on separate streams means that changing, say, the number of
/// RIS surfaces leaves the user drop and the direct channels untouched.
enum class Purpose : std::uint64_t {
    LayoutAp = 1,
    LayoutUser,
    LayoutRis,
    ShadowApUe,
    ShadowBsUe,
    ShadowRisUe,
    ZfpEnsemble,
    FadingBsUe,
    FadingBsRis,
    FadingRisUe,
    Estimation,
    RandomPhases,
};

/// SplitMix64 finaliser; used to hash seed paths into engine seeds.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Derives a 64-bit seed from a root seed and a path of integer keys.
std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> path) noexcept;

/// A seeded random stream.
///
/// Thin wrapper over std::mt19937_64 with the handful of distributions the
/// simulator needs. Not thread-safe; give each worker its own stream.
class Stream {
public:
    explicit Stream(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(engine_);
    }

    double normal() { return normal_(engine_); }

    /// Circularly-symmetric CN(0, 1): real and imaginary parts N(0, 1/2).
    std::complex<double> complex_normal() {
        constexpr double kHalfSqrt = 0.70710678118654752440;
        const double re = normal_(engine_);
        const double im = normal_(engine_);
        return {re * kHalfSqrt, im * kHalfSqrt};
    }

    std::mt19937_64& engine() noexcept { return engine_; }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Root of a campaign's seed tree.
class SeedTree {
public:
    explicit SeedTree(std::uint64_t root) : root_(root) {}

    std::uint64_t root() const noexcept { return root_; }

    Stream stream(std::uint64_t trial, Purpose purpose) const {
        return Stream(derive_seed(root_, {trial, static_cast<std::uint64_t>(purpose)}));
    }

    Stream stream(std::uint64_t trial, Purpose purpose, std::uint64_t a) const {
        return Stream(derive_seed(root_, {trial, static_cast<std::uint64_t>(purpose), a}));
    }

    Stream stream(std::uint64_t trial, Purpose purpose, std::uint64_t a, std::uint64_t b) const {
        return Stream(derive_seed(root_, {trial, static_cast<std::uint64_t>(purpose), a, b}));
    }

private:
    std::uint64_t root_;
};

}  // namespace celledge

#endif  // CELLEDGE_RNG_HPP
