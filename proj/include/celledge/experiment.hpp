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

#ifndef CELLEDGE_EXPERIMENT_HPP
#define CELLEDGE_EXPERIMENT_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "celledge/cfmimo.hpp"
#include "celledge/channel.hpp"
#include "celledge/ris.hpp"
#include "celledge/rng.hpp"
#include "celledge/scenario.hpp"
#include "celledge/scheme.hpp"

namespace celledge::experiment {

struct NoiseSpec {
    double density_dbm_hz = -174.0;
    double noise_figure_db = 9.0;
    double bandwidth_hz = 10e6;

    friend bool operator==(const NoiseSpec&, const NoiseSpec&) = default;
};

/// Thermal noise power in watts for the given density, figure and bandwidth.
double derive_noise_power(double density_dbm_hz, double noise_figure_db, double bandwidth_hz);

struct CampaignConfig {
    std::vector<Scheme> schemes{kAllSchemes.begin(), kAllSchemes.end()};
    std::size_t trials = 500;
    std::size_t realizations_per_trial = 10;
    std::uint64_t seed = 1;

    std::size_t m = 100;  ///< APs in the cell-free network; BS antennas in the RIS system
    std::size_t k = 5;
    std::size_t s = 5;
    std::size_t n_per_surface = 200;
    double total_power_w = 20.0;
    double csi_quality = 1.0;

    scenario::AreaSpec area{};
    channel::PropagationParams propagation{};
    NoiseSpec noise{};

    std::size_t expectation_samples = 200;
    double condition_threshold = 1e8;
    std::size_t ris_max_iterations = 20;
    double ris_convergence_tol = 1e-6;

    double noise_power_w() const;
    cfmimo::CfmmConfig cfmm() const;
    ris::RisConfig ris() const;

    bool has(Scheme s) const noexcept;
    bool any_cfmimo() const noexcept { return has(Scheme::Cbf) || has(Scheme::Zfp); }
    bool any_ris() const noexcept { return has(Scheme::RisOpt) || has(Scheme::RisRand); }

    /// Throws ConfigError naming the first field that violates an invariant.
    void validate() const;

    friend bool operator==(const CampaignConfig&, const CampaignConfig&) = default;
};

/// Rate samples on the full (scheme, trial, realisation, user) grid.
struct RateSamples {
    std::vector<Scheme> schemes;
    std::size_t trials = 0;
    std::size_t realizations = 0;
    std::size_t users = 0;
    std::vector<double> rates;

    std::size_t index(std::size_t scheme_idx, std::size_t trial, std::size_t realization,
                      std::size_t user) const noexcept {
        return ((scheme_idx * trials + trial) * realizations + realization) * users + user;
    }

    double at(std::size_t scheme_idx, std::size_t trial, std::size_t realization,
              std::size_t user) const {
        return rates[index(scheme_idx, trial, realization, user)];
    }

    /// All samples of one scheme, in grid order.
    std::vector<double> pooled(std::size_t scheme_idx) const;
};

struct Diagnostics {
    std::size_t singular_redraws = 0;  ///< rejected estimated-channel draws
    std::size_t ensemble_draws = 0;    ///< accepted estimated-channel draws
    std::size_t ao_runs = 0;
    std::size_t ao_unconverged = 0;

    Diagnostics& operator+=(const Diagnostics& o) noexcept;
    friend bool operator==(const Diagnostics&, const Diagnostics&) = default;
};

/// One trial's layout and large-scale gains.
struct TrialGeometry {
    scenario::Layout layout;
    channel::LargeScaleGains gains;
};

TrialGeometry draw_geometry(const CampaignConfig& cfg, std::size_t trial, const SeedTree& seeds);

/// Small-scale realisation of the RIS-aided system for one trial.
ris::RisChannels draw_ris_channels(const CampaignConfig& cfg, const TrialGeometry& geo,
                                   std::size_t trial, std::size_t realization,
                                   const SeedTree& seeds);

/// One trial's rates, laid out [scheme][realisation][user].
struct TrialSlice {
    std::vector<double> rates;
    Diagnostics diag;
};

/// Deterministic function of (cfg, trial): independent of execution order.
TrialSlice run_trial(const CampaignConfig& cfg, std::size_t trial, const SeedTree& seeds);

struct CampaignResult {
    RateSamples samples;
    Diagnostics diag;
};

/// Trials spread over `workers` OpenMP threads (0 = runtime default).
CampaignResult run_campaign(const CampaignConfig& cfg, int workers = 0);

/// Serial reference for run_campaign; bitwise-identical output.
CampaignResult run_campaign_serial(const CampaignConfig& cfg);

struct SchemeSummary {
    Scheme scheme{};
    double p5_se = 0.0;
    double median_se = 0.0;
    double mean_se = 0.0;
    double mean_sum_throughput = 0.0;
    std::size_t sample_count = 0;
};

struct SummaryStats {
    std::vector<SchemeSummary> per_scheme;

    const SchemeSummary& of(Scheme s) const;
};

/// Pools per-user rates for the percentiles; sum throughput is the sum over
/// users per (trial, realisation), averaged.
SummaryStats summarize(const RateSamples& samples);

}  // namespace celledge::experiment

#endif  // CELLEDGE_EXPERIMENT_HPP
