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

#include "hcpd/series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hcpd/math_util.hpp"

namespace hcpd {

Series::Series(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < kMinLength) {
        throw std::invalid_argument("series needs at least " + std::to_string(kMinLength) +
                                    " observations, got " + std::to_string(values_.size()));
    }
    KahanSum sum;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw std::invalid_argument("series value at index " + std::to_string(i) +
                                        " is not finite");
        }
        sum.add(values_[i]);
    }
    mean_ = sum.value() / static_cast<double>(values_.size());
}

std::vector<double> Series::centered() const {
    std::vector<double> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = values_[i] - mean_;
    return out;
}

}  // namespace hcpd
