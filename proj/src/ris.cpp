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

#include "celledge/ris.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "celledge/csv.hpp"
#include "celledge/errors.hpp"

namespace celledge::ris {

using cplx = std::complex<double>;

void RisConfig::validate() const {
    if (m < 1) throw ConfigError("need at least one BS antenna", "m");
    if (k < 1) throw ConfigError("need at least one user", "k");
    if (!(total_power_w >= 0.0)) throw ConfigError("power must be non-negative", "total_power_w");
    if (!(noise_power_w > 0.0)) throw ConfigError("noise power must be positive", "noise_power_w");
    if (max_iterations < 1) throw ConfigError("need at least one iteration", "ris.max_iterations");
    if (!(convergence_tol > 0.0)) {
        throw ConfigError("convergence tolerance must be positive", "ris.convergence_tol");
    }
}

Eigen::VectorXcd combined_channel(const PhaseConfig& q, const RisChannels& ch, std::size_t user) {
    const auto k = static_cast<Eigen::Index>(user);
    Eigen::VectorXcd c = ch.f.col(k);
    if (ch.h.rows() > 0) {
        const Eigen::VectorXcd weights = ch.g.col(k).cwiseProduct(q.q);
        c.noalias() += ch.h.transpose() * weights;
    }
    return c;
}

namespace {

// Phase update given the precomputed H w.
PhaseConfig phases_for(const RisChannels& ch, const Eigen::VectorXcd& w,
                       const Eigen::VectorXcd& hw, Eigen::Index k) {
    const cplx direct = ch.f.col(k).transpose() * w;
    const double phi0 = direct == cplx{} ? 0.0 : std::arg(direct);
    PhaseConfig out;
    out.q.resize(ch.h.rows());
    for (Eigen::Index n = 0; n < out.q.size(); ++n) {
        const cplx chi = ch.g(n, k) * hw(n);
        out.q(n) = std::polar(1.0, phi0 - std::arg(chi));
    }
    return out;
}

}  // namespace

PhaseConfig optimize_phases(const RisChannels& ch, const Eigen::VectorXcd& w, std::size_t user) {
    const auto k = static_cast<Eigen::Index>(user);
    if (ch.h.rows() == 0) return PhaseConfig{Eigen::VectorXcd(0)};
    const Eigen::VectorXcd hw = ch.h * w;
    return phases_for(ch, w, hw, k);
}

namespace {

Eigen::VectorXcd conj_normalised(const Eigen::VectorXcd& c) {
    const double norm = c.norm();
    if (!(norm > 0.0)) throw DegenerateChannelError("matched filter of a zero channel");
    return c.conjugate() / norm;
}

Eigen::VectorXcd initial_beamformer(const RisChannels& ch, Eigen::Index k) {
    const Eigen::VectorXcd f = ch.f.col(k);
    if (f.norm() > 0.0) return conj_normalised(f);
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(f.size());
    e(0) = 1.0;
    return e;
}

double triangle_residual(const RisChannels& ch, const Eigen::VectorXcd& w,
                         const Eigen::VectorXcd& hw, const Eigen::VectorXcd& c, Eigen::Index k) {
    const double achieved = std::abs(cplx((c.transpose() * w).value()));
    double bound = std::abs(cplx(ch.f.col(k).transpose() * w));
    if (hw.size() > 0) bound += ch.g.col(k).cwiseProduct(hw).cwiseAbs().sum();
    return bound > 0.0 ? std::abs(bound - achieved) / bound : 0.0;
}

}  // namespace

Eigen::VectorXcd matched_filter(const RisChannels& ch, const PhaseConfig& q, std::size_t user) {
    return conj_normalised(combined_channel(q, ch, user));
}

AoResult alternating_optimization(const RisChannels& ch, std::size_t user, const RisConfig& cfg) {
    const auto k = static_cast<Eigen::Index>(user);
    AoResult res;
    res.w = initial_beamformer(ch, k);
    res.phases.q = Eigen::VectorXcd::Ones(ch.h.rows());

    for (std::size_t it = 0; it < cfg.max_iterations; ++it) {
        const Eigen::VectorXcd hw =
            ch.h.rows() > 0 ? Eigen::VectorXcd(ch.h * res.w) : Eigen::VectorXcd(0);
        PhaseConfig q = phases_for(ch, res.w, hw, k);
        const Eigen::VectorXcd c = combined_channel(q, ch, user);
        const double phase_obj = std::abs(cplx((c.transpose() * res.w).value()));
        const double norm = c.norm();
        res.trace.triangle_residual.push_back(triangle_residual(ch, res.w, hw, c, k));

        if (!(norm > 0.0)) {
            // Nothing reaches the user; keep the direct-channel beamformer.
            res.trace.converged = true;
            break;
        }
        auto& objective = res.trace.objective_per_iteration;
        if (!objective.empty() && norm < objective.back()) {
            res.trace.converged = true;
            break;
        }
        const double prev = objective.empty() ? phase_obj : objective.back();
        res.phases = std::move(q);
        res.w = c.conjugate() / norm;
        objective.push_back(norm);

        const double step_gain = (norm - phase_obj) / norm;
        const double iter_gain = (norm - prev) / norm;
        if (step_gain < cfg.convergence_tol ||
            (objective.size() > 1 && iter_gain < cfg.convergence_tol)) {
            res.trace.converged = true;
            break;
        }
    }
    res.trace.iterations_used = res.trace.objective_per_iteration.size();
    return res;
}

double ris_rate_from_gain(double channel_power, const RisConfig& cfg) {
    const double snr = channel_power * cfg.total_power_w / cfg.noise_power_w;
    return std::log2(1.0 + snr) / static_cast<double>(cfg.k);
}

double ris_rate(const RisChannels& ch, const PhaseConfig& q, const RisConfig& cfg,
                std::size_t user) {
    return ris_rate_from_gain(combined_channel(q, ch, user).squaredNorm(), cfg);
}

PhaseConfig random_phases(std::size_t n, Stream& rng) {
    PhaseConfig out;
    out.q.resize(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < out.q.size(); ++i) {
        out.q(i) = std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi));
    }
    return out;
}

void write_trace_csv(std::ostream& os, const AoTrace& trace) {
    os << "iteration,objective\n";
    for (std::size_t i = 0; i < trace.objective_per_iteration.size(); ++i) {
        os << (i + 1) << ',' << csv::real(trace.objective_per_iteration[i]) << '\n';
    }
}

}  // namespace celledge::ris
