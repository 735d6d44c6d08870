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

#include "celledge/channel.hpp"

#include <cmath>

#include "celledge/errors.hpp"

namespace celledge::channel {

void PropagationParams::validate() const {
    if (!(fc_mhz > 0.0)) throw ConfigError("carrier frequency must be positive", "propagation.fc_mhz");
    if (!(h_tx_m > 0.0)) throw ConfigError("tx height must be positive", "propagation.h_tx_m");
    if (!(h_rx_m >= 0.0)) throw ConfigError("rx height must be non-negative", "propagation.h_rx_m");
    if (!(d0_km > 0.0)) throw ConfigError("d0 must be positive", "propagation.d0_km");
    if (!(d1_km > d0_km)) throw ConfigError("d1 must exceed d0", "propagation.d1_km");
    if (!(shadow_sigma_db >= 0.0)) {
        throw ConfigError("shadowing sigma must be non-negative", "propagation.shadow_sigma_db");
    }
    if (!(fs_exponent > 0.0)) {
        throw ConfigError("free-space exponent must be positive", "propagation.fs_exponent");
    }
}

double reference_intercept_db(const PropagationParams& p) {
    if (!(p.fc_mhz > 0.0) || !(p.h_tx_m > 0.0) || p.h_rx_m < 0.0) {
        throw DomainError("intercept needs positive frequency and antenna heights");
    }
    const double lf = std::log10(p.fc_mhz);
    return 46.3 + 33.9 * lf - 13.82 * std::log10(p.h_tx_m) - (1.1 * lf - 0.7) * p.h_rx_m +
           1.56 * lf - 0.8;
}

double path_loss_db(double d_km, const PropagationParams& p) {
    if (!(d_km > 0.0)) throw DomainError("path loss needs a positive distance");
    const double p0 = reference_intercept_db(p);
    if (d_km > p.d1_km) return -p0 - 35.0 * std::log10(d_km);
    const double near_d = d_km > p.d0_km ? d_km : p.d0_km;
    return -p0 - 15.0 * std::log10(p.d1_km) - 20.0 * std::log10(near_d);
}

double free_space_gain_db(double d_km, const PropagationParams& p) {
    if (!(d_km > 0.0)) throw DomainError("free-space gain needs a positive distance");
    return -reference_intercept_db(p) - 10.0 * p.fs_exponent * std::log10(d_km);
}

double literal_free_space_gain_db(double d_km, const PropagationParams& p) {
    if (!(d_km > 0.0)) throw DomainError("free-space gain needs a positive distance");
    return -reference_intercept_db(p) * std::pow(d_km, p.fs_exponent);
}

double bs_ris_gain_db(double d_km, const PropagationParams& p) {
    switch (p.bs_ris_model) {
        case BsRisModel::LogDistance:
            return free_space_gain_db(d_km, p);
        case BsRisModel::LiteralDb:
            break;
    }
    return literal_free_space_gain_db(d_km, p);
}

namespace {

double shadowed_gain(double d_m, const PropagationParams& p, Stream& rng) {
    const double x = p.shadow_sigma_db * rng.normal();
    return db_to_linear(path_loss_db(d_m / 1000.0, p) + x);
}

LargeScaleGains draw_impl(const scenario::Layout& layout, const PropagationParams& params,
                          Stream& ap_ue_rng, Stream& bs_ue_rng, Stream& ris_ue_rng) {
    using scenario::distance;
    const auto m = static_cast<Eigen::Index>(layout.ap_positions.size());
    const auto k = static_cast<Eigen::Index>(layout.user_positions.size());
    const auto s = static_cast<Eigen::Index>(layout.ris_positions.size());

    LargeScaleGains g;
    g.ap_ue.resize(m, k);
    for (Eigen::Index j = 0; j < k; ++j) {
        for (Eigen::Index i = 0; i < m; ++i) {
            const double d = distance(layout.ap_positions[i], layout.user_positions[j]);
            g.ap_ue(i, j) = shadowed_gain(d, params, ap_ue_rng);
        }
    }

    g.bs_ue.resize(k);
    for (Eigen::Index j = 0; j < k; ++j) {
        const double d = distance(layout.bs_position, layout.user_positions[j]);
        g.bs_ue(j) = shadowed_gain(d, params, bs_ue_rng);
    }

    g.bs_ris.resize(s);
    for (Eigen::Index r = 0; r < s; ++r) {
        const double d = distance(layout.bs_position, layout.ris_positions[r]);
        g.bs_ris(r) = db_to_linear(bs_ris_gain_db(d / 1000.0, params));
    }

    g.ris_ue.resize(s, k);
    for (Eigen::Index j = 0; j < k; ++j) {
        for (Eigen::Index r = 0; r < s; ++r) {
            const double d = distance(layout.ris_positions[r], layout.user_positions[j]);
            g.ris_ue(r, j) = shadowed_gain(d, params, ris_ue_rng);
        }
    }
    return g;
}

}  // namespace

LargeScaleGains draw_large_scale(const scenario::Layout& layout, const PropagationParams& params,
                                 ShadowStreams& streams) {
    return draw_impl(layout, params, streams.ap_ue, streams.bs_ue, streams.ris_ue);
}

LargeScaleGains draw_large_scale(const scenario::Layout& layout, const PropagationParams& params,
                                 Stream& rng) {
    return draw_impl(layout, params, rng, rng, rng);
}

Eigen::MatrixXcd draw_small_scale(std::size_t rows, std::size_t cols, Stream& rng) {
    Eigen::MatrixXcd h(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    std::complex<double>* data = h.data();
    for (Eigen::Index i = 0; i < h.size(); ++i) data[i] = rng.complex_normal();
    return h;
}

EstimateStats estimate_statistics(const Eigen::MatrixXd& beta, double q) {
    if (!(q > 0.0 && q <= 1.0)) throw ConfigError("csi_quality must lie in (0, 1]", "csi_quality");
    // Subtract from beta whichever part is at least half of it, so the
    // difference is exact and alpha + err_var == beta bit for bit.
    EstimateStats st;
    if (q >= 0.5) {
        st.alpha = q * beta;
        st.err_var = beta - st.alpha;
    } else {
        st.err_var = (1.0 - q) * beta;
        st.alpha = beta - st.err_var;
    }
    return st;
}

ChannelRealization estimate_channels(const Eigen::MatrixXd& beta, const Eigen::MatrixXcd& h,
                                     double q, Stream& rng) {
    EstimateStats st = estimate_statistics(beta, q);
    ChannelRealization out;
    out.g_hat = st.alpha.cwiseSqrt().cast<std::complex<double>>().cwiseProduct(h);
    if (q == 1.0) {
        out.g_true = out.g_hat;
    } else {
        const Eigen::MatrixXcd e = draw_small_scale(static_cast<std::size_t>(beta.rows()),
                                                    static_cast<std::size_t>(beta.cols()), rng);
        out.g_true = out.g_hat + st.err_var.cwiseSqrt().cast<std::complex<double>>().cwiseProduct(e);
    }
    out.alpha = std::move(st.alpha);
    out.err_var = std::move(st.err_var);
    return out;
}

}  // namespace celledge::channel
