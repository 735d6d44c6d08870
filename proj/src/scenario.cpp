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

#include "celledge/scenario.hpp"

#include <cmath>
#include <string>

#include "celledge/csv.hpp"
#include "celledge/errors.hpp"

namespace celledge::scenario {

namespace {

constexpr int kMaxRedraws = 100000;

Point uniform_point(const AreaSpec& area, Stream& rng) {
    const double x = rng.uniform(0.0, area.side_length_m);
    const double y = rng.uniform(0.0, area.side_length_m);
    return {x, y};
}

bool far_from_all(const Point& p, const std::vector<Point>& others, double min_sep) {
    for (const Point& o : others) {
        if (distance(p, o) < min_sep) return false;
    }
    return true;
}

template <typename Accept>
Point draw_accepted(const AreaSpec& area, Stream& rng, Accept accept, const char* what) {
    for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
        const Point p = uniform_point(area, rng);
        if (accept(p)) return p;
    }
    throw ConfigError(std::string("cannot place ") + what +
                          ": min_separation_m too large for the area",
                      "area.min_separation_m");
}

Layout generate_impl(const AreaSpec& area, std::size_t m, std::size_t k, std::size_t s,
                     Stream& ap_rng, Stream& user_rng, Stream& ris_rng) {
    area.validate();
    if (m < 1) throw ConfigError("at least one AP / BS antenna is required", "m");
    if (k < 1) throw ConfigError("at least one user is required", "k");

    Layout layout;
    layout.bs_position = area.bs_position;
    layout.antenna_heights = area.heights;
    const double sep = area.min_separation_m;

    layout.ap_positions.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        layout.ap_positions.push_back(uniform_point(area, ap_rng));
    }

    layout.ris_positions.reserve(s);
    for (std::size_t i = 0; i < s; ++i) {
        layout.ris_positions.push_back(draw_accepted(
            area, ris_rng, [&](const Point& p) { return distance(p, area.bs_position) >= sep; },
            "RIS surface"));
    }

    layout.user_positions.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        layout.user_positions.push_back(draw_accepted(
            area, user_rng,
            [&](const Point& p) {
                return distance(p, area.bs_position) >= sep &&
                       far_from_all(p, layout.ap_positions, sep) &&
                       far_from_all(p, layout.ris_positions, sep);
            },
            "user"));
    }
    return layout;
}

}  // namespace

double distance(const Point& p, const Point& q) noexcept {
    return std::hypot(p.x - q.x, p.y - q.y);
}

void AreaSpec::validate() const {
    if (!(side_length_m > 0.0)) {
        throw ConfigError("area side length must be positive", "area.side_length_m");
    }
    if (!contains(bs_position)) {
        throw ConfigError("BS position must lie inside the area", "area.bs_position");
    }
    if (!(min_separation_m >= 0.0)) {
        throw ConfigError("min separation must be non-negative", "area.min_separation_m");
    }
}

bool AreaSpec::contains(const Point& p) const noexcept {
    return p.x >= 0.0 && p.x <= side_length_m && p.y >= 0.0 && p.y <= side_length_m;
}

Layout generate_layout(const AreaSpec& area, std::size_t m, std::size_t k, std::size_t s,
                       LayoutStreams& streams) {
    return generate_impl(area, m, k, s, streams.ap, streams.user, streams.ris);
}

Layout generate_layout(const AreaSpec& area, std::size_t m, std::size_t k, std::size_t s,
                       Stream& rng) {
    return generate_impl(area, m, k, s, rng, rng, rng);
}

void write_layout_csv(std::ostream& os, const Layout& layout) {
    os << "kind,index,x_m,y_m\n";
    auto rows = [&os](const char* kind, const std::vector<Point>& pts) {
        for (std::size_t i = 0; i < pts.size(); ++i) {
            os << kind << ',' << i << ',' << csv::real(pts[i].x) << ',' << csv::real(pts[i].y)
               << '\n';
        }
    };
    rows("AP", layout.ap_positions);
    os << "BS,0," << csv::real(layout.bs_position.x) << ',' << csv::real(layout.bs_position.y)
       << '\n';
    rows("RIS", layout.ris_positions);
    rows("UE", layout.user_positions);
}

}  // namespace celledge::scenario
