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

#ifndef CELLEDGE_RUNNER_HPP
#define CELLEDGE_RUNNER_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "celledge/config.hpp"

namespace celledge::cli {

/// Flags of the `run` command.
///
/// Precedence: flag values override the config file or preset, which
/// override the built-in defaults. `config` and `preset` are exclusive.
struct RunRequest {
    std::optional<std::filesystem::path> config;
    std::optional<std::string> preset;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<std::size_t> realizations;
    int workers = 0;
    std::filesystem::path out_dir = "out";
};

/// Campaign points a request resolves to (one unless a sweep preset is used).
std::vector<SweepPoint> resolve(const RunRequest& req);

/// Runs every point and writes samples.csv, summary.txt and manifest.json.
/// A single point writes into out_dir; sweep points write into
/// out_dir/<label>/ plus an aggregate out_dir/summary.txt.
/// Returns the process exit status; diagnostics go to `err`.
int run(const RunRequest& req, std::ostream& log, std::ostream& err);

/// Re-runs the configuration recorded in a manifest.json.
int replay(const std::filesystem::path& manifest, const std::filesystem::path& out_dir,
           int workers, std::ostream& log, std::ostream& err);

/// Writes the layout of one trial as CSV (kind,index,x_m,y_m).
int dump_layout(const RunRequest& req, std::size_t trial, const std::filesystem::path& out_csv,
                std::ostream& err);

/// Writes the AO convergence trace of one (trial, realisation, user).
int dump_trace(const RunRequest& req, std::size_t trial, std::size_t realization,
               std::size_t user, const std::filesystem::path& out_csv, std::ostream& err);

}  // namespace celledge::cli

#endif  // CELLEDGE_RUNNER_HPP
