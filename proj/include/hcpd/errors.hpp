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

#include <stdexcept>
#include <string>
#include <vector>

namespace hcpd {

/// Input whose variance is zero (or otherwise carries no information),
/// making every test statistic undefined.
class DegenerateInputError : public std::runtime_error {
public:
    explicit DegenerateInputError(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative solver (nonlinear least squares, quadrature, eigensolver)
/// failed to converge. Carries the last iterate when one exists.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what, std::vector<double> last_iterate = {})
        : std::runtime_error(what), last_iterate_(std::move(last_iterate)) {}

    const std::vector<double>& last_iterate() const { return last_iterate_; }

private:
    std::vector<double> last_iterate_;
};

}  // namespace hcpd
