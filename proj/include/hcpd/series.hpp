// Copyright 2026 The hcpd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hcpd {

/// An observed real-valued sequence X_1..X_N. Immutable after construction;
/// rejects N < 4 and non-finite values.
class Series {
public:
    explicit Series(std::vector<double> values);

    std::size_t size() const { return values_.size(); }
    std::span<const double> values() const { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }

    /// Sample mean, computed once with compensated summation.
    double mean() const { return mean_; }

    /// Deviations X_i - mean(X). All statistics in this library depend on the
    /// data only through these, which makes them location invariant.
    std::vector<double> centered() const;

    static constexpr std::size_t kMinLength = 4;

private:
    std::vector<double> values_;
    double mean_;
};

}  // namespace hcpd
