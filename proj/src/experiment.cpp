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

#include "celledge/experiment.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>

#include "celledge/errors.hpp"
#include "celledge/stats.hpp"

namespace celledge::experiment {

double derive_noise_power(double density_dbm_hz, double noise_figure_db, double bandwidth_hz) {
    if (!(bandwidth_hz > 0.0)) throw ConfigError("bandwidth must be positive", "noise.bandwidth_hz");
    const double dbm = density_dbm_hz + noise_figure_db + 10.0 * std::log10(bandwidth_hz);
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double CampaignConfig::noise_power_w() const {
    return derive_noise_power(noise.density_dbm_hz, noise.noise_figure_db, noise.bandwidth_hz);
}

cfmimo::CfmmConfig CampaignConfig::cfmm() const {
    cfmimo::CfmmConfig c;
    c.m = m;
    c.k = k;
    c.total_power_w = total_power_w;
    c.noise_power_w = noise_power_w();
    c.expectation_samples = expectation_samples;
    c.condition_threshold = condition_threshold;
    return c;
}

ris::RisConfig CampaignConfig::ris() const {
    ris::RisConfig c;
    c.m = m;
    c.k = k;
    c.s = s;
    c.n_per_surface = n_per_surface;
    c.total_power_w = total_power_w;
    c.noise_power_w = noise_power_w();
    c.max_iterations = ris_max_iterations;
    c.convergence_tol = ris_convergence_tol;
    return c;
}

bool CampaignConfig::has(Scheme sc) const noexcept {
    return std::find(schemes.begin(), schemes.end(), sc) != schemes.end();
}

void CampaignConfig::validate() const {
    for (std::size_t i = 0; i < schemes.size(); ++i) {
        for (std::size_t j = i + 1; j < schemes.size(); ++j) {
            if (schemes[i] == schemes[j]) throw ConfigError("duplicate scheme", "schemes");
        }
    }
    if (trials < 1) throw ConfigError("trials must be at least 1", "trials");
    if (realizations_per_trial < 1) {
        throw ConfigError("realizations_per_trial must be at least 1", "realizations_per_trial");
    }
    if (m < 1) throw ConfigError("m must be at least 1", "m");
    if (k < 1) throw ConfigError("k must be at least 1", "k");
    if (!(total_power_w >= 0.0)) throw ConfigError("total power must be non-negative", "total_power_w");
    if (!(csi_quality > 0.0 && csi_quality <= 1.0)) {
        throw ConfigError("csi_quality must lie in (0, 1]", "csi_quality");
    }
    if (has(Scheme::Zfp) && k > m) {
        throw ConfigError("zero forcing needs k <= m", "k");
    }
    area.validate();
    propagation.validate();
    noise_power_w();
    cfmm().validate();
    ris().validate();
}

std::vector<double> RateSamples::pooled(std::size_t scheme_idx) const {
    const std::size_t per_scheme = trials * realizations * users;
    const auto first = rates.begin() + static_cast<std::ptrdiff_t>(scheme_idx * per_scheme);
    return {first, first + static_cast<std::ptrdiff_t>(per_scheme)};
}

Diagnostics& Diagnostics::operator+=(const Diagnostics& o) noexcept {
    singular_redraws += o.singular_redraws;
    ensemble_draws += o.ensemble_draws;
    ao_runs += o.ao_runs;
    ao_unconverged += o.ao_unconverged;
    return *this;
}

TrialGeometry draw_geometry(const CampaignConfig& cfg, std::size_t trial, const SeedTree& seeds) {
    scenario::AreaSpec area = cfg.area;
    area.heights = {cfg.propagation.h_tx_m, cfg.propagation.h_rx_m};
    scenario::LayoutStreams ls{seeds.stream(trial, Purpose::LayoutAp),
                               seeds.stream(trial, Purpose::LayoutUser),
                               seeds.stream(trial, Purpose::LayoutRis)};
    TrialGeometry geo;
    geo.layout = scenario::generate_layout(area, cfg.m, cfg.k, cfg.s, ls);
    channel::ShadowStreams ss{seeds.stream(trial, Purpose::ShadowApUe),
                              seeds.stream(trial, Purpose::ShadowBsUe),
                              seeds.stream(trial, Purpose::ShadowRisUe)};
    geo.gains = channel::draw_large_scale(geo.layout, cfg.propagation, ss);
    return geo;
}

ris::RisChannels draw_ris_channels(const CampaignConfig& cfg, const TrialGeometry& geo,
                                   std::size_t trial, std::size_t realization,
                                   const SeedTree& seeds) {
    const auto m = static_cast<Eigen::Index>(cfg.m);
    const auto k = static_cast<Eigen::Index>(cfg.k);
    const auto ns = static_cast<Eigen::Index>(cfg.n_per_surface);
    const auto s_count = static_cast<Eigen::Index>(cfg.s);
    const auto& g = geo.gains;

    ris::RisChannels ch;
    {
        Stream rng = seeds.stream(trial, Purpose::FadingBsUe, realization);
        ch.f = channel::draw_small_scale(cfg.m, cfg.k, rng);
        for (Eigen::Index u = 0; u < k; ++u) ch.f.col(u) *= std::sqrt(g.bs_ue(u));
    }
    ch.h.resize(s_count * ns, m);
    ch.g.resize(s_count * ns, k);
    for (Eigen::Index s = 0; s < s_count; ++s) {
        // Per-surface streams, element-major draws: a surface with more
        // elements extends, rather than reshuffles, a smaller one.
        Stream h_rng = seeds.stream(trial, Purpose::FadingBsRis, realization,
                                    static_cast<std::uint64_t>(s));
        ch.h.middleRows(s * ns, ns) =
            channel::draw_small_scale(cfg.m, cfg.n_per_surface, h_rng).transpose() *
            std::sqrt(g.bs_ris(s));
        Stream g_rng = seeds.stream(trial, Purpose::FadingRisUe, realization,
                                    static_cast<std::uint64_t>(s));
        Eigen::MatrixXcd gs = channel::draw_small_scale(cfg.k, cfg.n_per_surface, g_rng).transpose();
        for (Eigen::Index u = 0; u < k; ++u) gs.col(u) *= std::sqrt(g.ris_ue(s, u));
        ch.g.middleRows(s * ns, ns) = gs;
    }
    return ch;
}

TrialSlice run_trial(const CampaignConfig& cfg, std::size_t trial, const SeedTree& seeds) {
    const std::size_t n_sch = cfg.schemes.size();
    const std::size_t n_real = cfg.realizations_per_trial;
    const std::size_t k = cfg.k;
    TrialSlice out;
    out.rates.assign(n_sch * n_real * k, 0.0);
    if (n_sch == 0) return out;

    auto cell = [&](std::size_t sch, std::size_t r, std::size_t u) -> double& {
        return out.rates[(sch * n_real + r) * k + u];
    };

    const TrialGeometry geo = draw_geometry(cfg, trial, seeds);
    const cfmimo::CfmmConfig cf = cfg.cfmm();
    const ris::RisConfig rc = cfg.ris();

    // The cell-free bounds depend only on channel statistics, so they are
    // fixed per layout and repeated across its small-scale realisations.
    Eigen::VectorXd cbf_rates;
    Eigen::VectorXd zfp_rates;
    if (cfg.any_cfmimo()) {
        const Eigen::MatrixXd& beta = geo.gains.ap_ue;
        const channel::EstimateStats st = channel::estimate_statistics(beta, cfg.csi_quality);
        if (cfg.has(Scheme::Cbf)) {
            const auto eta = cfmimo::cbf_power_control(st.alpha);
            cbf_rates = cfmimo::cbf_rate(st.alpha, beta, eta, cf).per_user_rate;
        }
        if (cfg.has(Scheme::Zfp)) {
            Stream rng = seeds.stream(trial, Purpose::ZfpEnsemble);
            const auto ensemble = cfmimo::draw_estimate_ensemble(
                st.alpha, cfg.expectation_samples, cfg.condition_threshold, rng,
                &out.diag.singular_redraws);
            out.diag.ensemble_draws += ensemble.size();
            const Eigen::MatrixXd power =
                cfmimo::mean_precoder_power(ensemble, cfg.condition_threshold);
            const auto coeffs = cfmimo::zfp_power_control(power);
            const Eigen::MatrixXd chi =
                cfg.csi_quality == 1.0
                    ? Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k),
                                            static_cast<Eigen::Index>(k))
                    : cfmimo::zfp_chi_all(power, st.err_var);
            zfp_rates = cfmimo::zfp_rate(coeffs, chi, cf).per_user_rate;
        }
    }

    for (std::size_t r = 0; r < n_real; ++r) {
        ris::RisChannels ch;
        if (cfg.any_ris()) ch = draw_ris_channels(cfg, geo, trial, r, seeds);

        for (std::size_t sch = 0; sch < n_sch; ++sch) {
            switch (cfg.schemes[sch]) {
                case Scheme::Cbf:
                    for (std::size_t u = 0; u < k; ++u) cell(sch, r, u) = cbf_rates(u);
                    break;
                case Scheme::Zfp:
                    for (std::size_t u = 0; u < k; ++u) cell(sch, r, u) = zfp_rates(u);
                    break;
                case Scheme::RisOpt:
                    for (std::size_t u = 0; u < k; ++u) {
                        const ris::AoResult ao = ris::alternating_optimization(ch, u, rc);
                        ++out.diag.ao_runs;
                        if (!ao.trace.converged) ++out.diag.ao_unconverged;
                        cell(sch, r, u) = ris::ris_rate(ch, ao.phases, rc, u);
                    }
                    break;
                case Scheme::RisRand:
                    for (std::size_t u = 0; u < k; ++u) {
                        Stream rng = seeds.stream(trial, Purpose::RandomPhases, r, u);
                        const ris::PhaseConfig q = ris::random_phases(ch.elements(), rng);
                        cell(sch, r, u) = ris::ris_rate(ch, q, rc, u);
                    }
                    break;
            }
        }
    }
    return out;
}

namespace {

CampaignResult empty_result(const CampaignConfig& cfg) {
    CampaignResult res;
    res.samples.schemes = cfg.schemes;
    res.samples.trials = cfg.trials;
    res.samples.realizations = cfg.realizations_per_trial;
    res.samples.users = cfg.k;
    res.samples.rates.assign(cfg.schemes.size() * cfg.trials * cfg.realizations_per_trial * cfg.k,
                             0.0);
    return res;
}

void store(CampaignResult& res, std::size_t trial, const TrialSlice& slice) {
    auto& rs = res.samples;
    const std::size_t block = rs.realizations * rs.users;
    for (std::size_t sch = 0; sch < rs.schemes.size(); ++sch) {
        std::copy_n(slice.rates.begin() + static_cast<std::ptrdiff_t>(sch * block), block,
                    rs.rates.begin() + static_cast<std::ptrdiff_t>(rs.index(sch, trial, 0, 0)));
    }
}

}  // namespace

CampaignResult run_campaign_serial(const CampaignConfig& cfg) {
    cfg.validate();
    CampaignResult res = empty_result(cfg);
    const SeedTree seeds(cfg.seed);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        const TrialSlice slice = run_trial(cfg, t, seeds);
        store(res, t, slice);
        res.diag += slice.diag;
    }
    return res;
}

CampaignResult run_campaign(const CampaignConfig& cfg, int workers) {
    cfg.validate();
    CampaignResult res = empty_result(cfg);
    const SeedTree seeds(cfg.seed);
    const int threads = workers > 0 ? workers : omp_get_max_threads();
    const auto n_trials = static_cast<std::int64_t>(cfg.trials);

    std::vector<Diagnostics> diag(cfg.trials);
    std::exception_ptr first_error;
    std::int64_t first_error_trial = std::numeric_limits<std::int64_t>::max();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t t = 0; t < n_trials; ++t) {
        try {
            const auto trial = static_cast<std::size_t>(t);
            const TrialSlice slice = run_trial(cfg, trial, seeds);
            store(res, trial, slice);
            diag[trial] = slice.diag;
        } catch (...) {
#pragma omp critical(celledge_campaign_error)
            {
                // Report the lowest failing trial so errors do not depend on
                // scheduling.
                if (t < first_error_trial) {
                    first_error_trial = t;
                    first_error = std::current_exception();
                }
            }
        }
    }
    if (first_error) std::rethrow_exception(first_error);
    for (const Diagnostics& d : diag) res.diag += d;
    return res;
}

const SchemeSummary& SummaryStats::of(Scheme s) const {
    for (const auto& p : per_scheme) {
        if (p.scheme == s) return p;
    }
    throw StatisticsError("scheme not present in summary");
}

SummaryStats summarize(const RateSamples& samples) {
    if (samples.trials * samples.realizations * samples.users == 0) {
        throw StatisticsError("cannot summarise an empty sample grid");
    }
    SummaryStats out;
    for (std::size_t sch = 0; sch < samples.schemes.size(); ++sch) {
        std::vector<double> pool = samples.pooled(sch);
        SchemeSummary ss;
        ss.scheme = samples.schemes[sch];
        ss.sample_count = pool.size();

        double total = 0.0;
        for (double v : pool) total += v;
        ss.mean_se = total / static_cast<double>(pool.size());

        // Grid order groups each (trial, realisation)'s users contiguously.
        double sum_acc = 0.0;
        const std::size_t groups = samples.trials * samples.realizations;
        for (std::size_t gi = 0; gi < groups; ++gi) {
            double s = 0.0;
            for (std::size_t u = 0; u < samples.users; ++u) s += pool[gi * samples.users + u];
            sum_acc += s;
        }
        ss.mean_sum_throughput = sum_acc / static_cast<double>(groups);

        std::sort(pool.begin(), pool.end());
        ss.p5_se = stats::percentile_sorted(pool, 0.05);
        ss.median_se = stats::percentile_sorted(pool, 0.5);
        out.per_scheme.push_back(ss);
    }
    return out;
}

}  // namespace celledge::experiment
