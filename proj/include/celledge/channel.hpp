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

#ifndef CELLEDGE_CHANNEL_HPP
#define CELLEDGE_CHANNEL_HPP

#include <Eigen/Dense>
#include <cstddef>

#include "celledge/rng.hpp"
#include "celledge/scenario.hpp"

namespace celledge::channel {

/// How the BS-RIS line-of-sight link is attenuated.
enum class BsRisModel {
    /// Gain in dB is -P0 * d_km^alpha (the intercept scaled by distance^alpha).
    LiteralDb,
    /// Log-distance law -P0 - 10 alpha log10(d_km).
    LogDistance,
};

struct PropagationParams {
    double fc_mhz = 1900.0;
    double h_tx_m = 15.0;
    double h_rx_m = 1.65;
    double d0_km = 0.010;
    double d1_km = 0.050;
    double shadow_sigma_db = 8.0;
    double fs_exponent = 2.5;
    BsRisModel bs_ris_model = BsRisModel::LiteralDb;

    void validate() const;

    friend bool operator==(const PropagationParams&, const PropagationParams&) = default;
};

/// COST-Hata intercept P0 in dB (path loss at the 1 km reference distance).
double reference_intercept_db(const PropagationParams& params);

/// Three-slope COST-Hata gain in dB (<= 0) at ground distance d_km.
double path_loss_db(double d_km, const PropagationParams& params);

/// Log-distance free-space-like gain: -P0 - 10 * fs_exponent * log10(d_km).
double free_space_gain_db(double d_km, const PropagationParams& params);

/// Literal dB-domain gain: -P0 * d_km^fs_exponent.
double literal_free_space_gain_db(double d_km, const PropagationParams& params);

/// Gain of the BS-RIS family under `params.bs_ris_model`.
double bs_ris_gain_db(double d_km, const PropagationParams& params);

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

/// Linear-scale large-scale gains for every channel family.
struct LargeScaleGains {
    Eigen::MatrixXd ap_ue;   ///< M x K
    Eigen::VectorXd bs_ue;   ///< K, identical across the M co-located antennas
    Eigen::VectorXd bs_ris;  ///< S, no shadowing
    Eigen::MatrixXd ris_ue;  ///< S x K
};

struct ShadowStreams {
    Stream ap_ue;
    Stream bs_ue;
    Stream ris_ue;
};

/// beta = 10^((P + X)/10), X ~ N(0, sigma^2) for the COST-Hata families;
/// the BS-RIS family is deterministic given the layout.
LargeScaleGains draw_large_scale(const scenario::Layout& layout, const PropagationParams& params,
                                 ShadowStreams& streams);

LargeScaleGains draw_large_scale(const scenario::Layout& layout, const PropagationParams& params,
                                 Stream& rng);

/// rows x cols i.i.d. CN(0, 1) entries, drawn in column-major order.
Eigen::MatrixXcd draw_small_scale(std::size_t rows, std::size_t cols, Stream& rng);

/// Known channel, its estimate, and the estimation statistics per link.
struct ChannelRealization {
    Eigen::MatrixXcd g_true;
    Eigen::MatrixXcd g_hat;
    Eigen::MatrixXd alpha;    ///< variance of the estimate, q * beta
    Eigen::MatrixXd err_var;  ///< variance of the error, (1 - q) * beta
};

struct EstimateStats {
    Eigen::MatrixXd alpha;
    Eigen::MatrixXd err_var;
};

/// Splits beta into estimate and error variance for CSI quality q in (0, 1].
EstimateStats estimate_statistics(const Eigen::MatrixXd& beta, double csi_quality);

/// Draws a realisation with the orthogonal decomposition
/// g_true = g_hat + e, g_hat = sqrt(q beta) h, e = sqrt((1-q) beta) w,
/// where `h` is the caller's CN(0,1) draw and w is drawn from `rng`.
/// With q = 1 no extra draws are made and g_hat == g_true.
ChannelRealization estimate_channels(const Eigen::MatrixXd& beta, const Eigen::MatrixXcd& h,
                                     double csi_quality, Stream& rng);

}  // namespace celledge::channel

#endif  // CELLEDGE_CHANNEL_HPP
