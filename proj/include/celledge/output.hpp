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

#ifndef CELLEDGE_OUTPUT_HPP
#define CELLEDGE_OUTPUT_HPP

#include <filesystem>
#include <ostream>
#include <string>

#include <json.hpp>

#include "celledge/experiment.hpp"

namespace celledge::cli {

/// Header `scheme,trial,realization,user,rate_bps_hz`, grid order.
void write_samples_csv(std::ostream& os, const experiment::RateSamples& samples);

/// `key = value` lines, keys `[prefix.]SCHEME.metric` and
/// `[prefix.]diagnostics.name`.
void write_summary(std::ostream& os, const experiment::SummaryStats& stats,
                   const experiment::Diagnostics& diag, const std::string& prefix = {});

struct ManifestInfo {
    std::string label;
    std::string started_at;
    std::string finished_at;
    int workers = 1;
};

nlohmann::json make_manifest(const experiment::CampaignConfig& cfg,
                             const experiment::Diagnostics& diag, const ManifestInfo& info);

/// UTC timestamp, ISO 8601.
std::string utc_now();

/// Writes `content` to `path` via a sibling temporary file and rename, so a
/// failed write never leaves a truncated file behind. Throws std::runtime_error.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace celledge::cli

#endif  // CELLEDGE_OUTPUT_HPP
