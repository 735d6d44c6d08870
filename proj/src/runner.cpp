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

#include "celledge/runner.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

#include "celledge/errors.hpp"
#include "celledge/output.hpp"

namespace celledge::cli {

namespace fs = std::filesystem;

namespace {

void ensure_writable_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw std::runtime_error("cannot create output directory '" + dir.string() + "'");
    }
    const fs::path probe = dir / ".celledge-write-probe";
    {
        std::ofstream out(probe);
        if (!out) throw std::runtime_error("output directory '" + dir.string() + "' is not writable");
    }
    fs::remove(probe, ec);
}

struct PointOutput {
    experiment::SummaryStats stats;
    experiment::Diagnostics diag;
};

PointOutput run_point(const SweepPoint& point, const fs::path& dir, int workers,
                      std::ostream& log) {
    ManifestInfo info;
    info.label = point.label;
    info.workers = workers;
    info.started_at = utc_now();
    log << "[" << point.label << "] " << point.config.trials << " trials x "
        << point.config.realizations_per_trial << " realizations, M=" << point.config.m
        << " K=" << point.config.k << " S=" << point.config.s
        << " N_s=" << point.config.n_per_surface << '\n';

    const auto result = experiment::run_campaign(point.config, workers);
    info.finished_at = utc_now();
    PointOutput out{experiment::summarize(result.samples), result.diag};

    ensure_writable_dir(dir);
    std::ostringstream samples;
    write_samples_csv(samples, result.samples);
    write_file_atomic(dir / "samples.csv", samples.str());

    std::ostringstream summary;
    write_summary(summary, out.stats, out.diag);
    write_file_atomic(dir / "summary.txt", summary.str());

    write_file_atomic(dir / "manifest.json",
                      make_manifest(point.config, out.diag, info).dump(2) + "\n");
    for (const auto& s : out.stats.per_scheme) {
        log << "  " << to_string(s.scheme) << ": p5 " << s.p5_se << ", median " << s.median_se
            << ", sum " << s.mean_sum_throughput << " bit/s/Hz\n";
    }
    return out;
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const ConfigError& e) {
        err << "error: " << e.what();
        if (!e.field().empty()) err << " [field: " << e.field() << "]";
        err << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return 1;
}

experiment::CampaignConfig single_config(const RunRequest& req) {
    auto points = resolve(req);
    if (points.size() != 1) {
        throw ConfigError("this command needs a single configuration, not a sweep preset", "preset");
    }
    return points.front().config;
}

}  // namespace

std::vector<SweepPoint> resolve(const RunRequest& req) {
    if (req.config && req.preset) {
        throw ConfigError("--config and --preset are mutually exclusive", "preset");
    }
    std::vector<SweepPoint> points;
    if (req.preset) {
        points = preset(*req.preset);
    } else if (req.config) {
        points.push_back({"run", parse_config(*req.config)});
    } else {
        points.push_back({"run", experiment::CampaignConfig{}});
    }
    for (auto& p : points) {
        if (req.seed) p.config.seed = *req.seed;
        if (req.trials) p.config.trials = *req.trials;
        if (req.realizations) p.config.realizations_per_trial = *req.realizations;
        p.config.validate();
    }
    return points;
}

int run(const RunRequest& req, std::ostream& log, std::ostream& err) {
    return guarded(err, [&] {
        const auto points = resolve(req);
        ensure_writable_dir(req.out_dir);
        if (points.size() == 1) {
            run_point(points.front(), req.out_dir, req.workers, log);
            return 0;
        }
        std::ostringstream aggregate;
        for (const auto& p : points) {
            const PointOutput po = run_point(p, req.out_dir / p.label, req.workers, log);
            write_summary(aggregate, po.stats, po.diag, p.label);
        }
        write_file_atomic(req.out_dir / "summary.txt", aggregate.str());
        return 0;
    });
}

int replay(const fs::path& manifest, const fs::path& out_dir, int workers, std::ostream& log,
           std::ostream& err) {
    return guarded(err, [&] {
        std::ifstream in(manifest);
        if (!in) throw ConfigError("cannot open manifest '" + manifest.string() + "'");
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw ConfigError(std::string("manifest is not valid JSON: ") + e.what());
        }
        if (!j.contains("config")) throw ConfigError("manifest has no 'config' section", "config");
        SweepPoint point{j.value("label", std::string("replay")), config_from_json(j["config"])};
        ensure_writable_dir(out_dir);
        run_point(point, out_dir, workers, log);
        return 0;
    });
}

int dump_layout(const RunRequest& req, std::size_t trial, const fs::path& out_csv,
                std::ostream& err) {
    return guarded(err, [&] {
        const auto cfg = single_config(req);
        const auto geo = experiment::draw_geometry(cfg, trial, SeedTree(cfg.seed));
        std::ostringstream os;
        scenario::write_layout_csv(os, geo.layout);
        if (out_csv.has_parent_path()) ensure_writable_dir(out_csv.parent_path());
        write_file_atomic(out_csv, os.str());
        return 0;
    });
}

int dump_trace(const RunRequest& req, std::size_t trial, std::size_t realization,
               std::size_t user, const fs::path& out_csv, std::ostream& err) {
    return guarded(err, [&] {
        const auto cfg = single_config(req);
        if (user >= cfg.k) throw ConfigError("user index out of range", "user");
        const SeedTree seeds(cfg.seed);
        const auto geo = experiment::draw_geometry(cfg, trial, seeds);
        const auto ch = experiment::draw_ris_channels(cfg, geo, trial, realization, seeds);
        const auto ao = ris::alternating_optimization(ch, user, cfg.ris());
        std::ostringstream os;
        ris::write_trace_csv(os, ao.trace);
        if (out_csv.has_parent_path()) ensure_writable_dir(out_csv.parent_path());
        write_file_atomic(out_csv, os.str());
        return 0;
    });
}

}  // namespace celledge::cli
