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

#ifndef CELLEDGE_CFMIMO_HPP
#define CELLEDGE_CFMIMO_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <vector>

#include "celledge/rng.hpp"
#include "celledge/scheme.hpp"

namespace celledge::cfmimo {

struct CfmmConfig {
    std::size_t m = 100;
    std::size_t k = 5;
    double total_power_w = 20.0;
    double noise_power_w = 3.1622776601683795e-13;
    std::size_t expectation_samples = 200;
    /// Realisations whose estimated channel has a larger 2-norm condition
    /// number are rejected as singular.
    double condition_threshold = 1e8;

    /// Equal split of the total budget; per_ap_power_w() * m == total_power_w.
    double per_ap_power_w() const noexcept { return total_power_w / static_cast<double>(m); }

    void validate() const;
};

/// Conjugate-beamforming coefficients, eta(m, k), M x K.
struct CbfPowerCoeffs {
    Eigen::MatrixXd eta;
};

/// Zero-forcing coefficients: equal per-user eta and the delta(k, m)
/// diagnostics (K x M) they were derived from.
struct ZfpPowerCoeffs {
    Eigen::VectorXd eta;
    Eigen::MatrixXd delta;
};

/// Full-power CBF: eta_mk = 1 / sum_k' alpha_mk' for every k.
CbfPowerCoeffs cbf_power_control(const Eigen::MatrixXd& alpha);

/// Statistics-only lower bound on the CBF rate of every user.
SchemeResult cbf_rate(const Eigen::MatrixXd& alpha, const Eigen::MatrixXd& beta,
                      const CbfPowerCoeffs& eta, const CfmmConfig& cfg);

/// 2-norm condition number of a K x M matrix (K <= M) from its Gram matrix.
double condition_number(const Eigen::MatrixXcd& g_hat);

/// W = G^H (G G^H)^{-1}, M x K, for a K x M estimated channel G.
/// Throws SingularChannelError above `condition_threshold` or when K > M.
Eigen::MatrixXcd zf_precoder(const Eigen::MatrixXcd& g_hat, double condition_threshold = 1e8);

/// i.i.d. K x M estimated-channel draws with entries CN(0, alpha_mk);
/// singular draws are replaced and counted in `redraws`.
std::vector<Eigen::MatrixXcd> draw_estimate_ensemble(const Eigen::MatrixXd& alpha,
                                                     std::size_t samples, double condition_threshold,
                                                     Stream& rng, std::size_t* redraws = nullptr);

/// Ensemble mean of |W_mi|^2, M x K. Both delta and chi are linear in it:
/// delta_im = P_mi and chi_k^i = sum_m eps_mk P_mi.
Eigen::MatrixXd mean_precoder_power(std::span<const Eigen::MatrixXcd> ensemble,
                                    double condition_threshold = 1e8);

/// chi_k as defined by the error-covariance term of the ZFP bound; length K.
Eigen::VectorXd zfp_chi(std::span<const Eigen::MatrixXcd> ensemble, const Eigen::MatrixXd& err_var,
                        std::size_t user, double condition_threshold = 1e8);

/// chi for all users at once: row k holds chi_k. K x K.
Eigen::MatrixXd zfp_chi_all(const Eigen::MatrixXd& mean_power, const Eigen::MatrixXd& err_var);

ZfpPowerCoeffs zfp_power_control(std::span<const Eigen::MatrixXcd> ensemble,
                                 double condition_threshold = 1e8);

/// Same, from a precomputed mean_precoder_power().
ZfpPowerCoeffs zfp_power_control(const Eigen::MatrixXd& mean_power);

/// ZFP lower bound; `chi` is K x K with row k = chi_k.
SchemeResult zfp_rate(const ZfpPowerCoeffs& eta, const Eigen::MatrixXd& chi, const CfmmConfig& cfg);

}  // namespace celledge::cfmimo

#endif  // CELLEDGE_CFMIMO_HPP
