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

#include <doctest.h>

#include <cmath>

#include "celledge/channel.hpp"
#include "celledge/errors.hpp"
#include "test_support.hpp"

using namespace celledge;
using namespace celledge::channel;

TEST_CASE("COST-Hata intercept") {
    PropagationParams p;
    CHECK(std::abs(reference_intercept_db(p) - 140.72) <= 0.01);

    p.h_rx_m = 0.0;
    // Oracle: independent evaluation of the intercept formula.
    CHECK(std::abs(reference_intercept_db(p) - 145.5110215) < 1e-6);
    CHECK(std::abs(reference_intercept_db(p) - 145.52) <= 0.01);

    PropagationParams a;
    PropagationParams b;
    b.fc_mhz = 3800.0;
    const double expected = (33.9 + 1.56 - 1.1 * 1.65) * std::log10(2.0);
    CHECK(reference_intercept_db(b) - reference_intercept_db(a) == doctest::Approx(expected));

    PropagationParams bad;
    bad.fc_mhz = 0.0;
    CHECK_THROWS_AS(reference_intercept_db(bad), DomainError);
    bad = {};
    bad.h_tx_m = -1.0;
    CHECK_THROWS_AS(reference_intercept_db(bad), DomainError);
}

TEST_CASE("three-slope path loss") {
    const PropagationParams p;
    const double p0 = reference_intercept_db(p);
    CHECK(path_loss_db(1.0, p) == doctest::Approx(-p0));
    CHECK(std::abs(path_loss_db(1.0, p) + 140.72) <= 0.01);

    // Oracle values computed independently from the three branches.
    CHECK(std::abs(path_loss_db(0.05, p) - (-95.1790339)) < 1e-6);
    CHECK(std::abs(path_loss_db(0.001, p) - (-81.1996338)) < 1e-6);
    CHECK(path_loss_db(0.001, p) == path_loss_db(0.010, p));

    CHECK_THROWS_AS(path_loss_db(0.0, p), DomainError);
    CHECK_THROWS_AS(path_loss_db(-1.0, p), DomainError);
}

TEST_CASE("path loss is continuous at both breakpoints") {
    const PropagationParams p;
    const double delta = 1e-9;
    for (double bp : {p.d0_km, p.d1_km}) {
        CHECK(std::abs(path_loss_db(bp - delta, p) - path_loss_db(bp + delta, p)) < 1e-6);
        CHECK(std::abs(path_loss_db(bp, p) - path_loss_db(bp + delta, p)) < 1e-6);
    }
}

TEST_CASE("path loss is non-increasing in distance") {
    const PropagationParams p;
    double prev = path_loss_db(1e-5, p);
    for (double d = 1e-5; d < 5.0; d *= 1.01) {
        const double v = path_loss_db(d, p);
        CHECK(v <= prev + 1e-12);
        prev = v;
    }
}

TEST_CASE("free-space gain") {
    PropagationParams p;
    const double p0 = reference_intercept_db(p);
    CHECK(free_space_gain_db(1.0, p) == doctest::Approx(-p0));
    CHECK(free_space_gain_db(0.1, p) == doctest::Approx(-p0 + 25.0));
    CHECK(std::abs(free_space_gain_db(0.1, p) + 115.72) <= 0.01);

    p.fs_exponent = 3.5;
    for (double d : {0.06, 0.3, 0.9, 2.0}) {
        CHECK(free_space_gain_db(d, p) == doctest::Approx(path_loss_db(d, p)));
    }
    CHECK_THROWS_AS(free_space_gain_db(0.0, p), DomainError);
}

TEST_CASE("literal dB-domain BS-RIS model") {
    PropagationParams p;
    const double p0 = reference_intercept_db(p);
    CHECK(literal_free_space_gain_db(1.0, p) == doctest::Approx(-p0));
    CHECK(literal_free_space_gain_db(0.1, p) == doctest::Approx(-p0 * std::pow(0.1, 2.5)));
    CHECK(bs_ris_gain_db(0.3, p) == literal_free_space_gain_db(0.3, p));
    p.bs_ris_model = BsRisModel::LogDistance;
    CHECK(bs_ris_gain_db(0.3, p) == free_space_gain_db(0.3, p));
    CHECK_THROWS_AS(literal_free_space_gain_db(-0.1, p), DomainError);
}

namespace {

scenario::Layout sample_layout(std::uint64_t seed) {
    Stream rng(seed);
    return scenario::generate_layout(scenario::AreaSpec{}, 40, 6, 4, rng);
}

}  // namespace

TEST_CASE("large-scale gains without shadowing are exact") {
    PropagationParams p;
    p.shadow_sigma_db = 0.0;
    scenario::Layout l;
    l.bs_position = {0, 0};
    l.ap_positions = {{0, 0}};
    l.user_positions = {{1000, 0}};
    l.ris_positions = {{0, 1000}};
    Stream rng(3);
    const LargeScaleGains g = draw_large_scale(l, p, rng);
    const double p0 = reference_intercept_db(p);
    CHECK(g.ap_ue(0, 0) == doctest::Approx(std::pow(10.0, -p0 / 10.0)));
    CHECK(g.bs_ue(0) == doctest::Approx(std::pow(10.0, -p0 / 10.0)));
    CHECK(g.bs_ris(0) == doctest::Approx(std::pow(10.0, -p0 / 10.0)));
    CHECK(std::abs(std::log10(g.ap_ue(0, 0)) + 14.072) < 1e-3);
}

TEST_CASE("large-scale gains are in (0, 1] with the expected shapes") {
    const PropagationParams p;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto l = sample_layout(seed);
        Stream rng(seed * 31);
        const LargeScaleGains g = draw_large_scale(l, p, rng);
        CHECK(g.ap_ue.rows() == 40);
        CHECK(g.ap_ue.cols() == 6);
        CHECK(g.bs_ue.size() == 6);
        CHECK(g.bs_ris.size() == 4);
        CHECK(g.ris_ue.rows() == 4);
        CHECK(g.ris_ue.cols() == 6);
        for (const Eigen::MatrixXd* m : {&g.ap_ue, &g.ris_ue}) {
            CHECK(m->minCoeff() > 0.0);
            CHECK(m->maxCoeff() <= 1.0);
        }
        CHECK(g.bs_ue.minCoeff() > 0.0);
        CHECK(g.bs_ue.maxCoeff() <= 1.0);
        CHECK(g.bs_ris.minCoeff() > 0.0);
        CHECK(g.bs_ris.maxCoeff() <= 1.0);
    }
}

TEST_CASE("shadowing moments match N(0, sigma^2)") {
    const PropagationParams p;
    // Fixed 1 km link: X = 10 log10(beta) + P0.
    scenario::Layout l;
    l.bs_position = {0, 0};
    l.ap_positions.assign(1000, {0, 0});
    l.user_positions.assign(100, {1000, 0});
    Stream rng(12345);
    const LargeScaleGains g = draw_large_scale(l, p, rng);
    const double p0 = reference_intercept_db(p);
    const Eigen::ArrayXXd x = 10.0 * g.ap_ue.array().log10() + p0;
    const double mean = x.mean();
    const double sd = std::sqrt((x - mean).square().sum() / static_cast<double>(x.size() - 1));
    CHECK(std::abs(mean) < 0.08);
    CHECK(std::abs(sd - 8.0) < 0.16);
}

TEST_CASE("BS-RIS gains never receive shadowing") {
    const PropagationParams p;
    const auto l = sample_layout(5);
    Stream a(1);
    Stream b(2);
    CHECK(draw_large_scale(l, p, a).bs_ris == draw_large_scale(l, p, b).bs_ris);
}

TEST_CASE("small-scale fading is CN(0, 1)") {
    Stream rng(77);
    const Eigen::MatrixXcd h = draw_small_scale(1000, 1000, rng);
    const double power = h.cwiseAbs2().mean();
    const std::complex<double> mean = h.mean();
    CHECK(std::abs(power - 1.0) < 0.01);
    CHECK(std::abs(mean.real()) < 0.004);
    CHECK(std::abs(mean.imag()) < 0.004);
    CHECK(std::abs(h.real().array().square().mean() - 0.5) < 0.005);

    Stream a(5);
    Stream b(5);
    CHECK(draw_small_scale(4, 3, a) == draw_small_scale(4, 3, b));
}

TEST_CASE("channel estimation with perfect CSI") {
    Stream rng(1);
    const Eigen::MatrixXd beta = Eigen::MatrixXd::Constant(3, 2, 0.25);
    const Eigen::MatrixXcd h = draw_small_scale(3, 2, rng);
    const ChannelRealization r = estimate_channels(beta, h, 1.0, rng);
    CHECK(r.g_hat == r.g_true);
    CHECK(r.err_var.isZero(0.0));
    CHECK(r.alpha == beta);
}

TEST_CASE("estimate statistics split beta exactly") {
    Eigen::MatrixXd beta(1, 1);
    beta << 2.0;
    const EstimateStats st = estimate_statistics(beta, 0.5);
    CHECK(st.alpha(0, 0) == 1.0);
    CHECK(st.err_var(0, 0) == 1.0);

    Stream rng(9);
    const Eigen::MatrixXd b = Eigen::MatrixXd::Random(20, 20).cwiseAbs() * 1e-9 +
                              Eigen::MatrixXd::Constant(20, 20, 1e-13);
    for (double q = 0.01; q <= 1.0; q += 0.0137) {
        const EstimateStats s = estimate_statistics(b, q);
        CHECK(((s.alpha + s.err_var).array() == b.array()).all());
    }
    CHECK_THROWS_AS(estimate_statistics(beta, 0.0), ConfigError);
    CHECK_THROWS_AS(estimate_statistics(beta, 1.5), ConfigError);
}

TEST_CASE("imperfect CSI: estimate variance and orthogonality") {
    Stream rng(31337);
    const Eigen::Index n = 100000;
    const Eigen::MatrixXd beta = Eigen::MatrixXd::Constant(n, 1, 3.0);
    const Eigen::MatrixXcd h = draw_small_scale(static_cast<std::size_t>(n), 1, rng);
    const ChannelRealization r = estimate_channels(beta, h, 0.7, rng);
    const double var_ratio = r.g_hat.cwiseAbs2().mean() / 3.0;
    CHECK(std::abs(var_ratio - 0.7) < 0.01);

    const Eigen::MatrixXcd err = r.g_true - r.g_hat;
    const std::complex<double> cross = (r.g_hat.array() * err.array().conjugate()).mean();
    const double corr = std::abs(cross) / std::sqrt(r.g_hat.cwiseAbs2().mean() * err.cwiseAbs2().mean());
    CHECK(corr < 0.01);
    CHECK(std::abs(err.cwiseAbs2().mean() / 3.0 - 0.3) < 0.01);
}
