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

#include <CLI11.hpp>

#include <iostream>

#include "celledge/config.hpp"
#include "celledge/runner.hpp"

namespace {

void add_campaign_flags(CLI::App& cmd, celledge::cli::RunRequest& req) {
    auto* config = cmd.add_option("--config", req.config, "JSON campaign configuration");
    auto* preset = cmd.add_option("--preset", req.preset, "fig3 | fig4 | fig5a | fig5b");
    config->excludes(preset);
    cmd.add_option("--seed", req.seed, "campaign seed (overrides config)");
    cmd.add_option("--trials", req.trials, "layout count (overrides config)")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--realizations", req.realizations,
                   "small-scale realizations per layout (overrides config)")
        ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cellsim: cell-edge spectral efficiency of cell-free massive MIMO vs RIS"};
    app.require_subcommand(1);
    app.set_version_flag("--version", CELLEDGE_VERSION);

    celledge::cli::RunRequest req;

    auto* run = app.add_subcommand("run", "run a campaign or a figure preset");
    add_campaign_flags(*run, req);
    run->add_option("--workers", req.workers, "worker threads (0 = all cores)")
        ->check(CLI::NonNegativeNumber);
    run->add_option("--out", req.out_dir, "output directory")->capture_default_str();

    std::string manifest;
    auto* replay = app.add_subcommand("replay", "re-run the configuration stored in a manifest");
    replay->add_option("manifest", manifest, "manifest.json of a previous run")->required();
    replay->add_option("--workers", req.workers, "worker threads")->check(CLI::NonNegativeNumber);
    replay->add_option("--out", req.out_dir, "output directory")->capture_default_str();

    std::size_t trial = 0;
    std::size_t realization = 0;
    std::size_t user = 0;
    std::string csv_out;
    auto* layout = app.add_subcommand("layout", "dump one trial's node positions as CSV");
    add_campaign_flags(*layout, req);
    layout->add_option("--trial", trial, "trial index")->capture_default_str();
    layout->add_option("--csv", csv_out, "output CSV path")->required();

    auto* trace = app.add_subcommand("trace", "dump one alternating-optimization trace as CSV");
    add_campaign_flags(*trace, req);
    trace->add_option("--trial", trial, "trial index")->capture_default_str();
    trace->add_option("--realization", realization, "realization index")->capture_default_str();
    trace->add_option("--user", user, "user index")->capture_default_str();
    trace->add_option("--csv", csv_out, "output CSV path")->required();

    auto* defaults = app.add_subcommand("defaults", "print the default configuration as JSON");

    CLI11_PARSE(app, argc, argv);

    if (*run) return celledge::cli::run(req, std::cout, std::cerr);
    if (*replay) return celledge::cli::replay(manifest, req.out_dir, req.workers, std::cout, std::cerr);
    if (*layout) return celledge::cli::dump_layout(req, trial, csv_out, std::cerr);
    if (*trace) return celledge::cli::dump_trace(req, trial, realization, user, csv_out, std::cerr);
    if (*defaults) {
        std::cout << celledge::cli::config_to_json(celledge::experiment::CampaignConfig{}).dump(2)
                  << '\n';
        return 0;
    }
    return 1;
}
