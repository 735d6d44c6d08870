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

#ifndef CELLEDGE_STATS_HPP
#define CELLEDGE_STATS_HPP

#include <span>
#include <vector>

namespace celledge::stats {

/// Empirical quantile, linear interpolation between order statistics with
/// plotting position (i - 1) / (n - 1). `p` must lie in [0, 1].
double percentile(std::span<const double> samples, double p);

/// Same on data already sorted ascending.
double percentile_sorted(std::span<const double> sorted, double p);

/// Empirical CDF evaluated at the sorted samples: value i/n at sorted[i-1].
std::vector<double> empirical_cdf(std::span<const double> sorted);

}  // namespace celledge::stats

#endif  // CELLEDGE_STATS_HPP
