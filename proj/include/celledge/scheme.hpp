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

#ifndef CELLEDGE_SCHEME_HPP
#define CELLEDGE_SCHEME_HPP

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <string_view>

namespace celledge {

enum class Scheme { Cbf, Zfp, RisOpt, RisRand };

inline constexpr std::array<Scheme, 4> kAllSchemes{Scheme::Cbf, Scheme::Zfp, Scheme::RisOpt,
                                                   Scheme::RisRand};

constexpr std::string_view to_string(Scheme s) noexcept {
    switch (s) {
        case Scheme::Cbf: return "CBF";
        case Scheme::Zfp: return "ZFP";
        case Scheme::RisOpt: return "RIS_OPT";
        case Scheme::RisRand: return "RIS_RAND";
    }
    return "?";
}

constexpr std::optional<Scheme> parse_scheme(std::string_view name) noexcept {
    for (Scheme s : kAllSchemes) {
        if (to_string(s) == name) return s;
    }
    return std::nullopt;
}

/// Per-user achievable rates (bit/s/Hz) of one scheme in one realisation.
struct SchemeResult {
    Scheme scheme{};
    Eigen::VectorXd per_user_rate;
    double sum_rate = 0.0;

    static SchemeResult from_rates(Scheme s, Eigen::VectorXd rates) {
        SchemeResult r{s, std::move(rates), 0.0};
        r.sum_rate = r.per_user_rate.sum();
        return r;
    }
};

}  // namespace celledge

#endif  // CELLEDGE_SCHEME_HPP
