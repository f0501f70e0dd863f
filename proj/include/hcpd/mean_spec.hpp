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
#include <functional>
#include <span>
#include <vector>

namespace hcpd {

/// Piecewise description of the mean path mu_i of a series: constant, one
/// level shift, several level shifts, or a level followed by a trend.
class MeanSpec {
public:
    static MeanSpec constant(double level = 0.0);

    /// One change: mu_i = level1 for i <= floor(N theta), level2 afterwards.
    /// Requires 0 < theta < 1.
    static MeanSpec single_change(double theta, double level1, double level2);

    /// Levels between consecutive breakpoints; breakpoints strictly
    /// increasing in (0, 1), levels.size() == breakpoints.size() + 1.
    static MeanSpec multi_change(std::vector<double> breakpoints, std::vector<double> levels);

    /// Constant level1 up to floor(N theta), then mu_i = trend(i / N).
    /// The trend must be integrable on [theta, 1].
    static MeanSpec trend_after(double theta, double level1, std::function<double(double)> trend);

    /// mu_i for 1-based index i in a sample of length n.
    double mean_at(std::size_t i, std::size_t n) const;

    /// The limiting CUSUM drift d(t) = M(t) - t M(1), where M(t) is the
    /// integral of the mean path over [0, t].
    double drift(double t) const;

    std::vector<double> drift_profile(std::span<const double> grid) const;

    /// Integral of d^2 over [0, 1] by adaptive quadrature; the consistency
    /// limit of the scaled Cramer-von Mises statistic.
    double drift_l2() const;

    bool is_constant() const { return kind_ == Kind::Constant; }

private:
    enum class Kind { Constant, Single, Multi, Trend };

    MeanSpec() = default;

    double mean_integral(double t) const;  // M(t)

    Kind kind_ = Kind::Constant;
    std::vector<double> breakpoints_;  // interior, strictly increasing
    std::vector<double> levels_;
    std::function<double(double)> trend_;
};

}  // namespace hcpd
