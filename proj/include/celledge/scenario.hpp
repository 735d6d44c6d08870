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

#ifndef CELLEDGE_SCENARIO_HPP
#define CELLEDGE_SCENARIO_HPP

#include <cstddef>
#include <ostream>
#include <vector>

#include "celledge/rng.hpp"

namespace celledge::scenario {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Euclidean ground distance in meters.
double distance(const Point& p, const Point& q) noexcept;

struct AntennaHeights {
    double tx_m = 15.0;
    double rx_m = 1.65;

    friend bool operator==(const AntennaHeights&, const AntennaHeights&) = default;
};

/// Square service area [0, side] x [0, side].
struct AreaSpec {
    double side_length_m = 1000.0;
    Point bs_position{500.0, 500.0};
    double min_separation_m = 10.0;
    AntennaHeights heights{};

    /// Throws ConfigError("area...") when the invariants do not hold.
    void validate() const;

    bool contains(const Point& p) const noexcept;

    friend bool operator==(const AreaSpec&, const AreaSpec&) = default;
};

/// Node positions shared by both systems under comparison: the distributed
/// APs of the cell-free network, and the central BS plus RIS surfaces of the
/// RIS-aided system, serving the same users.
struct Layout {
    std::vector<Point> ap_positions;
    std::vector<Point> user_positions;
    std::vector<Point> ris_positions;
    Point bs_position{};
    AntennaHeights antenna_heights{};

    friend bool operator==(const Layout&, const Layout&) = default;
};

/// Independent streams for each node kind, so that changing one count does
/// not perturb the other kinds' positions.
struct LayoutStreams {
    Stream ap;
    Stream user;
    Stream ris;
};

/// Uniform drop of m APs, k users and s RIS surfaces; the BS sits at
/// `area.bs_position`. RIS surfaces closer than min_separation to the BS, and
/// users closer than min_separation to any AP, RIS or the BS, are re-drawn.
Layout generate_layout(const AreaSpec& area, std::size_t m, std::size_t k, std::size_t s,
                       LayoutStreams& streams);

/// Single-stream convenience overload (all node kinds share `rng`).
Layout generate_layout(const AreaSpec& area, std::size_t m, std::size_t k, std::size_t s,
                       Stream& rng);

/// CSV dump: header `kind,index,x_m,y_m`, one row per node (AP, BS, RIS, UE).
void write_layout_csv(std::ostream& os, const Layout& layout);

}  // namespace celledge::scenario

#endif  // CELLEDGE_SCENARIO_HPP
