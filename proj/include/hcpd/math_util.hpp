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

#include <cmath>
#include <cstddef>
#include <span>

namespace hcpd {

/// Kahan compensated accumulator for long sums of small increments.
class KahanSum {
public:
    void add(double x) {
        const double y = x - compensation_;
        const double t = sum_ + y;
        compensation_ = (t - sum_) - y;
        sum_ = t;
    }

    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

inline double kahan_total(std::span<const double> values) {
    KahanSum acc;
    for (double v : values) acc.add(v);
    return acc.value();
}

/// log(t / (1 - t)), the antiderivative of 1 / (t (1 - t)) on (0, 1).
inline double logit(double t) {
    return std::log(t) - std::log1p(-t);
}

}  // namespace hcpd
