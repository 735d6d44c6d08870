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

#include "celledge/cfmimo.hpp"

#include <cmath>
#include <limits>

#include "celledge/channel.hpp"
#include "celledge/errors.hpp"

namespace celledge::cfmimo {

void CfmmConfig::validate() const {
    if (m < 1) throw ConfigError("need at least one AP", "m");
    if (k < 1) throw ConfigError("need at least one user", "k");
    if (!(total_power_w >= 0.0)) throw ConfigError("power must be non-negative", "total_power_w");
    if (!(noise_power_w > 0.0)) throw ConfigError("noise power must be positive", "noise_power_w");
    if (expectation_samples < 1) {
        throw ConfigError("need at least one expectation sample", "cfmimo.expectation_samples");
    }
    if (!(condition_threshold > 1.0)) {
        throw ConfigError("condition threshold must exceed 1", "cfmimo.condition_threshold");
    }
}

CbfPowerCoeffs cbf_power_control(const Eigen::MatrixXd& alpha) {
    CbfPowerCoeffs out;
    out.eta.resize(alpha.rows(), alpha.cols());
    for (Eigen::Index m = 0; m < alpha.rows(); ++m) {
        const double row_sum = alpha.row(m).sum();
        if (!(row_sum > 0.0)) {
            throw DegenerateChannelError("CBF power control: AP has an all-zero channel row");
        }
        out.eta.row(m).setConstant(1.0 / row_sum);
    }
    return out;
}

SchemeResult cbf_rate(const Eigen::MatrixXd& alpha, const Eigen::MatrixXd& beta,
                      const CbfPowerCoeffs& eta, const CfmmConfig& cfg) {
    const Eigen::Index k_users = alpha.cols();
    const double pm = cfg.per_ap_power_w();
    Eigen::VectorXd rates = Eigen::VectorXd::Zero(k_users);
    if (pm <= 0.0) return SchemeResult::from_rates(Scheme::Cbf, std::move(rates));

    const double noise_term = cfg.noise_power_w / pm;
    // Power radiated by AP m across all users: sum_i eta_mi alpha_mi.
    const Eigen::VectorXd ap_load = eta.eta.cwiseProduct(alpha).rowwise().sum();
    for (Eigen::Index k = 0; k < k_users; ++k) {
        const double coherent = eta.eta.col(k).cwiseSqrt().cwiseProduct(alpha.col(k)).sum();
        const double interference = beta.col(k).cwiseProduct(ap_load).sum();
        const double sinr = coherent * coherent / (noise_term + interference);
        rates(k) = std::log2(1.0 + sinr);
    }
    return SchemeResult::from_rates(Scheme::Cbf, std::move(rates));
}

double condition_number(const Eigen::MatrixXcd& g_hat) {
    const Eigen::MatrixXcd gram = g_hat * g_hat.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = es.eigenvalues();
    const double lo = ev.minCoeff();
    const double hi = ev.maxCoeff();
    if (!(lo > 0.0) || !(hi > 0.0)) return std::numeric_limits<double>::infinity();
    return std::sqrt(hi / lo);
}

Eigen::MatrixXcd zf_precoder(const Eigen::MatrixXcd& g_hat, double condition_threshold) {
    if (g_hat.rows() > g_hat.cols()) {
        throw SingularChannelError("zero forcing needs at least as many APs as users");
    }
    if (!(condition_number(g_hat) <= condition_threshold)) {
        throw SingularChannelError("estimated channel matrix is rank deficient");
    }
    const Eigen::MatrixXcd gram = g_hat * g_hat.adjoint();
    // W^H = (G G^H)^{-1} G
    const Eigen::MatrixXcd wh = gram.ldlt().solve(g_hat);
    return wh.adjoint();
}

std::vector<Eigen::MatrixXcd> draw_estimate_ensemble(const Eigen::MatrixXd& alpha,
                                                     std::size_t samples, double condition_threshold,
                                                     Stream& rng, std::size_t* redraws) {
    const auto m = static_cast<std::size_t>(alpha.rows());
    const auto k = static_cast<std::size_t>(alpha.cols());
    const Eigen::MatrixXd sd = alpha.cwiseSqrt().transpose();  // K x M
    std::vector<Eigen::MatrixXcd> out;
    out.reserve(samples);
    constexpr std::size_t kMaxRejects = 1000;
    std::size_t rejects = 0;
    while (out.size() < samples) {
        Eigen::MatrixXcd g = channel::draw_small_scale(k, m, rng);
        g = g.cwiseProduct(sd.cast<std::complex<double>>());
        if (condition_number(g) <= condition_threshold) {
            out.push_back(std::move(g));
        } else if (++rejects > kMaxRejects) {
            throw SingularChannelError("estimated channel ensemble is persistently singular");
        }
    }
    if (redraws != nullptr) *redraws += rejects;
    return out;
}

Eigen::MatrixXd mean_precoder_power(std::span<const Eigen::MatrixXcd> ensemble,
                                    double condition_threshold) {
    if (ensemble.empty()) throw ConfigError("empty channel ensemble", "cfmimo.expectation_samples");
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(ensemble.front().cols(), ensemble.front().rows());
    for (const Eigen::MatrixXcd& g : ensemble) {
        acc += zf_precoder(g, condition_threshold).cwiseAbs2();
    }
    return acc / static_cast<double>(ensemble.size());
}

Eigen::MatrixXd zfp_chi_all(const Eigen::MatrixXd& mean_power, const Eigen::MatrixXd& err_var) {
    return err_var.transpose() * mean_power;
}

Eigen::VectorXd zfp_chi(std::span<const Eigen::MatrixXcd> ensemble, const Eigen::MatrixXd& err_var,
                        std::size_t user, double condition_threshold) {
    const Eigen::MatrixXd p = mean_precoder_power(ensemble, condition_threshold);
    const auto k = static_cast<Eigen::Index>(user);
    return p.transpose() * err_var.col(k);
}

ZfpPowerCoeffs zfp_power_control(const Eigen::MatrixXd& mean_power) {
    ZfpPowerCoeffs out;
    out.delta = mean_power.transpose();
    // Column m of delta summed over users: average power AP m radiates per
    // unit eta. The busiest AP sets the common coefficient.
    const double busiest = out.delta.colwise().sum().maxCoeff();
    if (!(busiest > 0.0)) throw DegenerateChannelError("ZFP power control: zero precoder power");
    out.eta = Eigen::VectorXd::Constant(out.delta.rows(), 1.0 / busiest);
    return out;
}

ZfpPowerCoeffs zfp_power_control(std::span<const Eigen::MatrixXcd> ensemble,
                                 double condition_threshold) {
    return zfp_power_control(mean_precoder_power(ensemble, condition_threshold));
}

SchemeResult zfp_rate(const ZfpPowerCoeffs& eta, const Eigen::MatrixXd& chi, const CfmmConfig& cfg) {
    const Eigen::Index k_users = eta.eta.size();
    const double pm = cfg.per_ap_power_w();
    Eigen::VectorXd rates = Eigen::VectorXd::Zero(k_users);
    if (pm <= 0.0) return SchemeResult::from_rates(Scheme::Zfp, std::move(rates));
    const double noise_term = cfg.noise_power_w / pm;
    for (Eigen::Index k = 0; k < k_users; ++k) {
        const double leak = chi.row(k).dot(eta.eta);
        rates(k) = std::log2(1.0 + eta.eta(k) / (noise_term + leak));
    }
    return SchemeResult::from_rates(Scheme::Zfp, std::move(rates));
}

}  // namespace celledge::cfmimo
