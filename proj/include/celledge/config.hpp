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

#ifndef CELLEDGE_CONFIG_HPP
#define CELLEDGE_CONFIG_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "celledge/experiment.hpp"

namespace celledge::cli {

/// Parses a JSON campaign configuration. Omitted fields take their defaults,
/// unknown keys are rejected, and the result is validated. An empty or
/// whitespace-only document yields the default configuration.
///
/// Errors are ConfigError; syntax errors report line and column, invariant
/// violations name the offending field.
experiment::CampaignConfig parse_config_text(std::string_view text);

experiment::CampaignConfig parse_config(const std::filesystem::path& path);

/// Builds a configuration from a JSON object (same rules as parse_config_text).
experiment::CampaignConfig config_from_json(const nlohmann::json& j);

/// Full serialisation; every field is written explicitly.
nlohmann::json config_to_json(const experiment::CampaignConfig& cfg);

struct SweepPoint {
    std::string label;
    experiment::CampaignConfig config;
};

/// Named figure-reproduction presets: fig3, fig4, fig5a, fig5b.
std::vector<SweepPoint> preset(std::string_view name);

std::vector<std::string> preset_names();

}  // namespace celledge::cli

#endif  // CELLEDGE_CONFIG_HPP
