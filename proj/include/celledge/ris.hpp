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

#ifndef CELLEDGE_RIS_HPP
#define CELLEDGE_RIS_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <ostream>
#include <vector>

#include "celledge/rng.hpp"

namespace celledge::ris {

struct RisConfig {
    std::size_t m = 100;
    std::size_t k = 5;
    std::size_t s = 5;
    std::size_t n_per_surface = 200;
    double total_power_w = 20.0;
    double noise_power_w = 3.1622776601683795e-13;
    std::size_t max_iterations = 20;
    double convergence_tol = 1e-6;

    std::size_t total_elements() const noexcept { return s * n_per_surface; }

    void validate() const;
};

/// Unit-modulus reflection coefficients, one per element (length N).
struct PhaseConfig {
    Eigen::VectorXcd q;
};

/// Channels of one realisation with all surfaces stacked.
///
/// Column k of `f` is the direct BS-UE channel of user k (M), `h` is the
/// stacked RIS-BS matrix (N x M, surface s occupies rows
/// [s*N_s, (s+1)*N_s)), and column k of `g` the stacked RIS-UE channel (N).
struct RisChannels {
    Eigen::MatrixXcd f;
    Eigen::MatrixXcd h;
    Eigen::MatrixXcd g;

    std::size_t antennas() const noexcept { return static_cast<std::size_t>(f.rows()); }
    std::size_t users() const noexcept { return static_cast<std::size_t>(f.cols()); }
    std::size_t elements() const noexcept { return static_cast<std::size_t>(h.rows()); }
};

struct AoTrace {
    /// Effective-channel norm after each beamformer update; non-decreasing.
    std::vector<double> objective_per_iteration;
    /// Relative gap |(sum|chi_n| + |f^T w|) - |c^T w|| right after each
    /// phase update; zero up to rounding when phases combine coherently.
    std::vector<double> triangle_residual;
    bool converged = false;
    std::size_t iterations_used = 0;
};

struct AoResult {
    PhaseConfig phases;
    Eigen::VectorXcd w;
    AoTrace trace;
};

/// Effective channel c with c^T = g_k^T diag(q) H + f_k^T (length M).
Eigen::VectorXcd combined_channel(const PhaseConfig& q, const RisChannels& ch, std::size_t user);

/// Closed-form phase update for a fixed beamformer: every reflected term is
/// rotated onto the phase of the direct term f_k^T w (taken as 0 when the
/// direct term vanishes).
PhaseConfig optimize_phases(const RisChannels& ch, const Eigen::VectorXcd& w, std::size_t user);

/// w = conj(c) / ||c||. Throws DegenerateChannelError if c == 0.
Eigen::VectorXcd matched_filter(const RisChannels& ch, const PhaseConfig& q, std::size_t user);

/// Alternates optimize_phases and matched_filter starting from the matched
/// filter of the direct channel.
///
/// Stops when the objective changes by less than `convergence_tol`
/// (relative) between consecutive evaluations, or after `max_iterations`.
/// An update that would lower the objective through rounding is discarded.
AoResult alternating_optimization(const RisChannels& ch, std::size_t user, const RisConfig& cfg);

/// TDMA rate (1/K) log2(1 + ||c||^2 P_d / sigma^2) in bit/s/Hz.
double ris_rate(const RisChannels& ch, const PhaseConfig& q, const RisConfig& cfg,
                std::size_t user);

/// Same rate for a known effective-channel power ||c||^2.
double ris_rate_from_gain(double channel_power, const RisConfig& cfg);

/// i.i.d. phases uniform on [0, 2 pi).
PhaseConfig random_phases(std::size_t n, Stream& rng);

/// CSV dump of an AO trace: header `iteration,objective`.
void write_trace_csv(std::ostream& os, const AoTrace& trace);

}  // namespace celledge::ris

#endif  // CELLEDGE_RIS_HPP
