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

#include <sstream>

#include "celledge/errors.hpp"
#include "celledge/scenario.hpp"
#include "test_support.hpp"

using namespace celledge;
using namespace celledge::scenario;

TEST_CASE("distance") {
    CHECK(distance({0, 0}, {3, 4}) == doctest::Approx(5.0));
    CHECK(distance({7.5, -2}, {7.5, -2}) == 0.0);
    CHECK(distance({500, 500}, {500, 1000}) == 500.0);
    CHECK(distance({1, 2}, {4, 6}) == distance({4, 6}, {1, 2}));
}

TEST_CASE("full-scale layout has the configured counts and a central BS") {
    Stream rng(7);
    const AreaSpec area;
    const Layout l = generate_layout(area, 100, 5, 5, rng);
    CHECK(l.ap_positions.size() == 100);
    CHECK(l.user_positions.size() == 5);
    CHECK(l.ris_positions.size() == 5);
    CHECK(l.bs_position == Point{500.0, 500.0});
    for (const auto* pts : {&l.ap_positions, &l.user_positions, &l.ris_positions}) {
        for (const Point& p : *pts) CHECK(area.contains(p));
    }
}

TEST_CASE("layout is deterministic under a fixed seed") {
    const AreaSpec area;
    Stream a(42);
    Stream b(42);
    CHECK(generate_layout(area, 1, 1, 0, a) == generate_layout(area, 1, 1, 0, b));

    LayoutStreams sa{Stream(1), Stream(2), Stream(3)};
    LayoutStreams sb{Stream(1), Stream(2), Stream(3)};
    CHECK(generate_layout(area, 50, 8, 4, sa) == generate_layout(area, 50, 8, 4, sb));
}

TEST_CASE("separate node streams keep users fixed when other counts change") {
    const AreaSpec area;
    LayoutStreams a{Stream(1), Stream(2), Stream(3)};
    LayoutStreams b{Stream(1), Stream(2), Stream(3)};
    const Layout la = generate_layout(area, 100, 5, 1, a);
    const Layout lb = generate_layout(area, 100, 5, 10, b);
    // Users only move if one happened to land near one of the added surfaces.
    int same = 0;
    for (std::size_t i = 0; i < 5; ++i) same += la.user_positions[i] == lb.user_positions[i];
    CHECK(same >= 4);
    CHECK(la.ap_positions == lb.ap_positions);
}

TEST_CASE("user coordinates are uniform: mean and KS test") {
    const AreaSpec area;
    Stream rng(2024);
    std::vector<double> xs;
    std::vector<double> ys;
    // 10^5 users, drawn in batches so the rejection geometry stays sparse.
    for (int batch = 0; batch < 1000; ++batch) {
        const Layout l = generate_layout(area, 1, 100, 0, rng);
        for (const Point& p : l.user_positions) {
            xs.push_back(p.x);
            ys.push_back(p.y);
        }
    }
    double mx = 0;
    double my = 0;
    for (std::size_t i = 0; i < 10000; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    CHECK(std::abs(mx / 10000 - 500.0) < 5.0);
    CHECK(std::abs(my / 10000 - 500.0) < 5.0);

    const double crit = testing::ks_critical_01(xs.size());
    CHECK(testing::ks_uniform(xs, 0.0, 1000.0) < crit);
    CHECK(testing::ks_uniform(ys, 0.0, 1000.0) < crit);
}

TEST_CASE("link distances respect the minimum separation") {
    AreaSpec area;
    area.min_separation_m = 10.0;
    Stream rng(99);
    for (int rep = 0; rep < 50; ++rep) {
        const Layout l = generate_layout(area, 200, 10, 5, rng);
        for (const Point& u : l.user_positions) {
            CHECK(distance(u, l.bs_position) >= 10.0);
            for (const Point& a : l.ap_positions) CHECK(distance(u, a) >= 10.0);
            for (const Point& r : l.ris_positions) CHECK(distance(u, r) >= 10.0);
        }
        for (const Point& r : l.ris_positions) CHECK(distance(r, l.bs_position) >= 10.0);
    }
}

TEST_CASE("invalid counts and areas are configuration errors") {
    Stream rng(1);
    const AreaSpec area;
    CHECK_THROWS_AS(generate_layout(area, 10, 0, 0, rng), ConfigError);
    CHECK_THROWS_AS(generate_layout(area, 0, 1, 0, rng), ConfigError);

    AreaSpec bad;
    bad.side_length_m = -1.0;
    CHECK_THROWS_AS(generate_layout(bad, 1, 1, 0, rng), ConfigError);
    AreaSpec outside;
    outside.bs_position = {2000.0, 0.0};
    CHECK_THROWS_AS(outside.validate(), ConfigError);
    AreaSpec crowded;
    crowded.side_length_m = 10.0;
    crowded.bs_position = {5.0, 5.0};
    crowded.min_separation_m = 100.0;
    CHECK_THROWS_AS(generate_layout(crowded, 1, 1, 0, rng), ConfigError);
}

TEST_CASE("layout CSV dump") {
    Layout l;
    l.ap_positions = {{1.5, 2.0}};
    l.bs_position = {500, 500};
    l.ris_positions = {{10, 20}};
    l.user_positions = {{0.125, 999}};
    std::ostringstream os;
    write_layout_csv(os, l);
    CHECK(os.str() ==
          "kind,index,x_m,y_m\n"
          "AP,0,1.5,2\n"
          "BS,0,500,500\n"
          "RIS,0,10,20\n"
          "UE,0,0.125,999\n");
}
