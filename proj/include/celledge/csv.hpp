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

#ifndef CELLEDGE_CSV_HPP
#define CELLEDGE_CSV_HPP

#include <cstdio>
#include <string>

namespace celledge::csv {

// CSV dialect: comma separated, '.' decimal point, '\n' line endings,
// mandatory single header row. Reals are written with 9 significant digits.

inline std::string real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

}  // namespace celledge::csv

#endif  // CELLEDGE_CSV_HPP
