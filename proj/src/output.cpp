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

#include "celledge/output.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include "celledge/config.hpp"
#include "celledge/csv.hpp"

namespace celledge::cli {

void write_samples_csv(std::ostream& os, const experiment::RateSamples& s) {
    os << "scheme,trial,realization,user,rate_bps_hz\n";
    for (std::size_t sch = 0; sch < s.schemes.size(); ++sch) {
        const std::string_view name = to_string(s.schemes[sch]);
        for (std::size_t t = 0; t < s.trials; ++t) {
            for (std::size_t r = 0; r < s.realizations; ++r) {
                for (std::size_t u = 0; u < s.users; ++u) {
                    os << name << ',' << t << ',' << r << ',' << u << ','
                       << csv::real(s.at(sch, t, r, u)) << '\n';
                }
            }
        }
    }
}

void write_summary(std::ostream& os, const experiment::SummaryStats& stats,
                   const experiment::Diagnostics& diag, const std::string& prefix) {
    const std::string pre = prefix.empty() ? std::string{} : prefix + ".";
    for (const auto& s : stats.per_scheme) {
        const std::string key = pre + std::string(to_string(s.scheme));
        os << key << ".p5_se = " << csv::real(s.p5_se) << '\n';
        os << key << ".median_se = " << csv::real(s.median_se) << '\n';
        os << key << ".mean_se = " << csv::real(s.mean_se) << '\n';
        os << key << ".mean_sum_throughput = " << csv::real(s.mean_sum_throughput) << '\n';
        os << key << ".samples = " << s.sample_count << '\n';
    }
    os << pre << "diagnostics.singular_redraws = " << diag.singular_redraws << '\n';
    os << pre << "diagnostics.ensemble_draws = " << diag.ensemble_draws << '\n';
    os << pre << "diagnostics.ao_runs = " << diag.ao_runs << '\n';
    os << pre << "diagnostics.ao_unconverged = " << diag.ao_unconverged << '\n';
}

nlohmann::json make_manifest(const experiment::CampaignConfig& cfg,
                             const experiment::Diagnostics& diag, const ManifestInfo& info) {
    return nlohmann::json{
        {"software", "celledge"},
        {"software_version", CELLEDGE_VERSION},
        {"label", info.label},
        {"seed", cfg.seed},
        {"workers", info.workers},
        {"started_at", info.started_at},
        {"finished_at", info.finished_at},
        {"diagnostics",
         {{"singular_redraws", diag.singular_redraws},
          {"ensemble_draws", diag.ensemble_draws},
          {"ao_runs", diag.ao_runs},
          {"ao_unconverged", diag.ao_unconverged}}},
        {"config", config_to_json(cfg)},
    };
}

std::string utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".partial";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
        out << content;
        out.flush();
        if (!out) {
            out.close();
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw std::runtime_error("write failed for '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw std::runtime_error("cannot move output into place: '" + path.string() + "'");
    }
}

}  // namespace celledge::cli
