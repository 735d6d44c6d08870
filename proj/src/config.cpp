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

#include "celledge/config.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "celledge/errors.hpp"

namespace celledge::cli {

using nlohmann::json;
using experiment::CampaignConfig;

namespace {

std::string join(const std::string& prefix, const std::string& key) {
    return prefix.empty() ? key : prefix + "." + key;
}

void reject_unknown(const json& obj, const std::string& prefix,
                    std::initializer_list<std::string_view> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
            throw ConfigError("unknown configuration key '" + join(prefix, it.key()) + "'",
                              join(prefix, it.key()));
        }
    }
}

const json* section(const json& obj, const std::string& key) {
    auto it = obj.find(key);
    if (it == obj.end()) return nullptr;
    if (!it->is_object()) throw ConfigError("'" + key + "' must be an object", key);
    return &*it;
}

void read_real(const json& obj, const std::string& prefix, const std::string& key, double& out) {
    auto it = obj.find(key);
    if (it == obj.end()) return;
    if (!it->is_number()) {
        throw ConfigError("'" + join(prefix, key) + "' must be a number", join(prefix, key));
    }
    out = it->get<double>();
}

template <typename Unsigned>
void read_count(const json& obj, const std::string& prefix, const std::string& key, Unsigned& out,
                std::uint64_t min_value) {
    auto it = obj.find(key);
    if (it == obj.end()) return;
    const std::string name = join(prefix, key);
    if (!it->is_number_integer()) throw ConfigError("'" + name + "' must be an integer", name);
    if (it->is_number_unsigned()) {
        const auto v = it->get<std::uint64_t>();
        if (v < min_value || v > std::numeric_limits<Unsigned>::max()) {
            throw ConfigError("'" + name + "' must be at least " + std::to_string(min_value), name);
        }
        out = static_cast<Unsigned>(v);
        return;
    }
    const auto v = it->get<std::int64_t>();
    if (v < 0 || static_cast<std::uint64_t>(v) < min_value) {
        throw ConfigError("'" + name + "' must be at least " + std::to_string(min_value), name);
    }
    out = static_cast<Unsigned>(v);
}

std::string bs_ris_model_name(channel::BsRisModel m) {
    return m == channel::BsRisModel::LogDistance ? "log_distance" : "literal_db";
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

CampaignConfig config_from_json(const json& j) {
    CampaignConfig c;
    if (j.is_null()) {
        c.validate();
        return c;
    }
    if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
    reject_unknown(j, "",
                   {"schemes", "trials", "realizations_per_trial", "seed", "m", "k", "s",
                    "n_per_surface", "total_power_w", "csi_quality", "area", "propagation", "noise",
                    "cfmimo", "ris"});

    if (auto it = j.find("schemes"); it != j.end()) {
        if (!it->is_array()) throw ConfigError("'schemes' must be an array of names", "schemes");
        c.schemes.clear();
        for (const json& e : *it) {
            if (!e.is_string()) throw ConfigError("'schemes' entries must be strings", "schemes");
            const auto sc = parse_scheme(e.get<std::string>());
            if (!sc) {
                throw ConfigError("unknown scheme '" + e.get<std::string>() +
                                      "' (expected CBF, ZFP, RIS_OPT, RIS_RAND)",
                                  "schemes");
            }
            c.schemes.push_back(*sc);
        }
    }
    read_count(j, "", "trials", c.trials, 1);
    read_count(j, "", "realizations_per_trial", c.realizations_per_trial, 1);
    read_count(j, "", "seed", c.seed, 0);
    read_count(j, "", "m", c.m, 1);
    read_count(j, "", "k", c.k, 1);
    read_count(j, "", "s", c.s, 0);
    read_count(j, "", "n_per_surface", c.n_per_surface, 0);
    read_real(j, "", "total_power_w", c.total_power_w);
    read_real(j, "", "csi_quality", c.csi_quality);

    if (const json* a = section(j, "area")) {
        reject_unknown(*a, "area", {"side_length_m", "bs_x_m", "bs_y_m", "min_separation_m"});
        read_real(*a, "area", "side_length_m", c.area.side_length_m);
        c.area.bs_position = {c.area.side_length_m / 2.0, c.area.side_length_m / 2.0};
        read_real(*a, "area", "bs_x_m", c.area.bs_position.x);
        read_real(*a, "area", "bs_y_m", c.area.bs_position.y);
        read_real(*a, "area", "min_separation_m", c.area.min_separation_m);
    }
    if (const json* p = section(j, "propagation")) {
        reject_unknown(*p, "propagation",
                       {"fc_mhz", "h_tx_m", "h_rx_m", "d0_km", "d1_km", "shadow_sigma_db",
                        "fs_exponent", "bs_ris_model"});
        auto& pp = c.propagation;
        read_real(*p, "propagation", "fc_mhz", pp.fc_mhz);
        read_real(*p, "propagation", "h_tx_m", pp.h_tx_m);
        read_real(*p, "propagation", "h_rx_m", pp.h_rx_m);
        read_real(*p, "propagation", "d0_km", pp.d0_km);
        read_real(*p, "propagation", "d1_km", pp.d1_km);
        read_real(*p, "propagation", "shadow_sigma_db", pp.shadow_sigma_db);
        read_real(*p, "propagation", "fs_exponent", pp.fs_exponent);
        if (auto it = p->find("bs_ris_model"); it != p->end()) {
            const std::string v = it->is_string() ? it->get<std::string>() : std::string{};
            if (v == "literal_db") {
                pp.bs_ris_model = channel::BsRisModel::LiteralDb;
            } else if (v == "log_distance") {
                pp.bs_ris_model = channel::BsRisModel::LogDistance;
            } else {
                throw ConfigError("'propagation.bs_ris_model' must be \"literal_db\" or "
                                  "\"log_distance\"",
                                  "propagation.bs_ris_model");
            }
        }
    }
    if (const json* n = section(j, "noise")) {
        reject_unknown(*n, "noise", {"density_dbm_hz", "noise_figure_db", "bandwidth_hz"});
        read_real(*n, "noise", "density_dbm_hz", c.noise.density_dbm_hz);
        read_real(*n, "noise", "noise_figure_db", c.noise.noise_figure_db);
        read_real(*n, "noise", "bandwidth_hz", c.noise.bandwidth_hz);
    }
    if (const json* cf = section(j, "cfmimo")) {
        reject_unknown(*cf, "cfmimo", {"expectation_samples", "condition_threshold"});
        read_count(*cf, "cfmimo", "expectation_samples", c.expectation_samples, 1);
        read_real(*cf, "cfmimo", "condition_threshold", c.condition_threshold);
    }
    if (const json* r = section(j, "ris")) {
        reject_unknown(*r, "ris", {"max_iterations", "convergence_tol"});
        read_count(*r, "ris", "max_iterations", c.ris_max_iterations, 1);
        read_real(*r, "ris", "convergence_tol", c.ris_convergence_tol);
    }
    c.validate();
    return c;
}

CampaignConfig parse_config_text(std::string_view text) {
    const bool blank = std::all_of(text.begin(), text.end(), [](char ch) {
        return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r';
    });
    if (blank) return config_from_json(json());
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ConfigError("config parse error at line " + std::to_string(line) + ", column " +
                          std::to_string(col) + ": " + e.what());
    }
    return config_from_json(j);
}

CampaignConfig parse_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

json config_to_json(const CampaignConfig& c) {
    json schemes = json::array();
    for (Scheme s : c.schemes) schemes.push_back(std::string(to_string(s)));
    const auto& p = c.propagation;
    return json{
        {"schemes", schemes},
        {"trials", c.trials},
        {"realizations_per_trial", c.realizations_per_trial},
        {"seed", c.seed},
        {"m", c.m},
        {"k", c.k},
        {"s", c.s},
        {"n_per_surface", c.n_per_surface},
        {"total_power_w", c.total_power_w},
        {"csi_quality", c.csi_quality},
        {"area",
         {{"side_length_m", c.area.side_length_m},
          {"bs_x_m", c.area.bs_position.x},
          {"bs_y_m", c.area.bs_position.y},
          {"min_separation_m", c.area.min_separation_m}}},
        {"propagation",
         {{"fc_mhz", p.fc_mhz},
          {"h_tx_m", p.h_tx_m},
          {"h_rx_m", p.h_rx_m},
          {"d0_km", p.d0_km},
          {"d1_km", p.d1_km},
          {"shadow_sigma_db", p.shadow_sigma_db},
          {"fs_exponent", p.fs_exponent},
          {"bs_ris_model", bs_ris_model_name(p.bs_ris_model)}}},
        {"noise",
         {{"density_dbm_hz", c.noise.density_dbm_hz},
          {"noise_figure_db", c.noise.noise_figure_db},
          {"bandwidth_hz", c.noise.bandwidth_hz}}},
        {"cfmimo",
         {{"expectation_samples", c.expectation_samples},
          {"condition_threshold", c.condition_threshold}}},
        {"ris", {{"max_iterations", c.ris_max_iterations}, {"convergence_tol", c.ris_convergence_tol}}},
    };
}

std::vector<std::string> preset_names() { return {"fig3", "fig4", "fig5a", "fig5b"}; }

std::vector<SweepPoint> preset(std::string_view name) {
    const CampaignConfig base;  // M=100, K=5, S=5, N_s=200, perfect CSI
    std::vector<SweepPoint> out;
    if (name == "fig3") {
        out.push_back({"fig3", base});
    } else if (name == "fig4") {
        // 22 campaigns; smaller per-point campaigns keep the sweep tractable.
        for (std::size_t k = 1; k <= 22; ++k) {
            CampaignConfig c = base;
            c.k = k;
            c.trials = 200;
            c.realizations_per_trial = 5;
            char label[8];
            std::snprintf(label, sizeof label, "K%02zu", k);
            out.push_back({label, c});
        }
    } else if (name == "fig5a") {
        for (std::size_t m : {100, 200, 500}) {
            CampaignConfig c = base;
            c.m = m;
            c.schemes = {Scheme::Cbf, Scheme::Zfp};
            out.push_back({"M" + std::to_string(m), c});
        }
    } else if (name == "fig5b") {
        // Fixed total N = 1000 across S, then N_s variants at S = 5.
        const std::pair<std::size_t, std::size_t> points[] = {
            {1, 1000}, {5, 200}, {10, 100}, {5, 100}, {5, 400}};
        for (const auto& [s, ns] : points) {
            CampaignConfig c = base;
            c.s = s;
            c.n_per_surface = ns;
            c.schemes = {Scheme::RisOpt};
            c.trials = 200;
            c.realizations_per_trial = 5;
            out.push_back({"S" + std::to_string(s) + "_N" + std::to_string(ns), c});
        }
    } else {
        throw ConfigError("unknown preset '" + std::string(name) +
                              "' (expected fig3, fig4, fig5a, fig5b)",
                          "preset");
    }
    return out;
}

}  // namespace celledge::cli
