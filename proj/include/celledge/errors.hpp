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

#ifndef CELLEDGE_ERRORS_HPP
#define CELLEDGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace celledge {

// Invalid user-supplied configuration: bad counts, out-of-range fractions,
// unknown keys. `field()` names the offending setting when one is known.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what, std::string field = {})
        : std::invalid_argument(what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// Argument outside the mathematical domain of a formula (d <= 0, log of 0).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A channel is identically zero where a non-zero one is required.
class DegenerateChannelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Estimated channel matrix is numerically rank deficient; the caller is
// expected to re-draw the realization.
class SingularChannelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class StatisticsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace celledge

#endif  // CELLEDGE_ERRORS_HPP
