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

#include <string>

#include "celledge/config.hpp"
#include "celledge/errors.hpp"

using namespace celledge;
using namespace celledge::cli;

namespace {

std::string field_of(std::string_view text) {
    try {
        parse_config_text(text);
    } catch (const ConfigError& e) {
        return e.field();
    }
    return "<no error>";
}

}  // namespace

TEST_CASE("empty input gives the defaults") {
    CHECK(parse_config_text("") == experiment::CampaignConfig{});
    CHECK(parse_config_text("  \n\t") == experiment::CampaignConfig{});
    CHECK(parse_config_text("{}") == experiment::CampaignConfig{});
}

TEST_CASE("fields are read and others keep their defaults") {
    const auto c = parse_config_text(R"({
        "schemes": ["ZFP", "RIS_OPT"],
        "trials": 12,
        "seed": 99,
        "k": 3,
        "csi_quality": 0.8,
        "propagation": {"shadow_sigma_db": 6.0, "bs_ris_model": "log_distance"},
        "ris": {"max_iterations": 7}
    })");
    CHECK(c.schemes == std::vector<Scheme>{Scheme::Zfp, Scheme::RisOpt});
    CHECK(c.trials == 12);
    CHECK(c.seed == 99);
    CHECK(c.k == 3);
    CHECK(c.csi_quality == 0.8);
    CHECK(c.propagation.shadow_sigma_db == 6.0);
    CHECK(c.propagation.bs_ris_model == channel::BsRisModel::LogDistance);
    CHECK(c.ris_max_iterations == 7);
    CHECK(c.m == 100);
    CHECK(c.realizations_per_trial == 10);
}

TEST_CASE("invalid values name the offending field") {
    CHECK(field_of(R"({"trials": -5})") == "trials");
    CHECK(field_of(R"({"trials": 0})") == "trials");
    CHECK(field_of(R"({"trials": 1.5})") == "trials");
    CHECK(field_of(R"({"csi_quality": 2})") == "csi_quality");
    CHECK(field_of(R"({"schemes": ["MMSE"]})") == "schemes");
    CHECK(field_of(R"({"schemes": ["CBF", "CBF"]})") == "schemes");
    CHECK(field_of(R"({"m": 2, "k": 3, "schemes": ["ZFP"]})") == "k");
    CHECK(field_of(R"({"noise": {"bandwidth_hz": 0}})") == "noise.bandwidth_hz");
    CHECK(field_of(R"({"propagation": {"bs_ris_model": "x"}})") == "propagation.bs_ris_model");
    CHECK(field_of(R"({"area": {"side_length_m": "wide"}})") == "area.side_length_m");
}

TEST_CASE("unknown keys are rejected") {
    CHECK_THROWS_AS(parse_config_text(R"({"trails": 3})"), ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"ris": {"iterations": 3}})"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[1, 2]"), ConfigError);
}

TEST_CASE("syntax errors report the line") {
    try {
        parse_config_text("{\n  \"trials\": 5,\n  \"seed\": }\n");
        FAIL("expected a parse error");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("serialisation round trip") {
    auto c = parse_config_text(R"({"schemes": ["RIS_RAND", "CBF"], "seed": 18446744073709551615,
                                   "total_power_w": 0.1, "csi_quality": 0.3})");
    c.propagation.d1_km = 0.0625;
    c.noise.noise_figure_db = 7.3;
    CHECK(config_from_json(config_to_json(c)) == c);
    CHECK(parse_config_text(config_to_json(c).dump()) == c);
    CHECK(config_from_json(config_to_json(experiment::CampaignConfig{})) == experiment::CampaignConfig{});
}

TEST_CASE("presets") {
    const auto names = preset_names();
    CHECK(names == std::vector<std::string>{"fig3", "fig4", "fig5a", "fig5b"});
    for (const auto& n : names) {
        const auto pts = preset(n);
        CHECK(!pts.empty());
        for (const auto& p : pts) CHECK_NOTHROW(p.config.validate());
    }
    const auto f3 = preset("fig3");
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].config.trials == 500);
    CHECK(f3[0].config.m == 100);
    CHECK(f3[0].config.k == 5);
    CHECK(preset("fig4").size() == 22);
    CHECK(preset("fig4")[21].config.k == 22);
    CHECK(preset("fig5a").size() == 3);
    CHECK(preset("fig5a")[2].config.m == 500);
    CHECK_THROWS_AS(preset("fig9"), ConfigError);
}
