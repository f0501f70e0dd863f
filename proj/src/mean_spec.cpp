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

#include "hcpd/mean_spec.hpp"

#include <cmath>
#include <stdexcept>

#include "quadrature.hpp"

namespace hcpd {

MeanSpec MeanSpec::constant(double level) {
    MeanSpec m;
    m.kind_ = Kind::Constant;
    m.levels_ = {level};
    return m;
}

MeanSpec MeanSpec::single_change(double theta, double level1, double level2) {
    if (!(theta > 0.0 && theta < 1.0)) {
        throw std::invalid_argument("change fraction theta must lie in (0, 1)");
    }
    MeanSpec m;
    m.kind_ = Kind::Single;
    m.breakpoints_ = {theta};
    m.levels_ = {level1, level2};
    return m;
}

MeanSpec MeanSpec::multi_change(std::vector<double> breakpoints, std::vector<double> levels) {
    if (breakpoints.empty() || levels.size() != breakpoints.size() + 1) {
        throw std::invalid_argument("need one more level than breakpoints");
    }
    double prev = 0.0;
    for (double b : breakpoints) {
        if (!(b > prev && b < 1.0)) {
            throw std::invalid_argument("breakpoints must be strictly increasing in (0, 1)");
        }
        prev = b;
    }
    MeanSpec m;
    m.kind_ = Kind::Multi;
    m.breakpoints_ = std::move(breakpoints);
    m.levels_ = std::move(levels);
    return m;
}

MeanSpec MeanSpec::trend_after(double theta, double level1, std::function<double(double)> trend) {
    if (!(theta > 0.0 && theta < 1.0)) {
        throw std::invalid_argument("change fraction theta must lie in (0, 1)");
    }
    if (!trend) throw std::invalid_argument("trend function is empty");
    MeanSpec m;
    m.kind_ = Kind::Trend;
    m.breakpoints_ = {theta};
    m.levels_ = {level1};
    m.trend_ = std::move(trend);
    return m;
}

double MeanSpec::mean_at(std::size_t i, std::size_t n) const {
    switch (kind_) {
        case Kind::Constant:
            return levels_[0];
        case Kind::Single:
        case Kind::Multi: {
            for (std::size_t seg = 0; seg < breakpoints_.size(); ++seg) {
                const auto cut = static_cast<std::size_t>(
                    std::floor(static_cast<double>(n) * breakpoints_[seg]));
                if (i <= cut) return levels_[seg];
            }
            return levels_.back();
        }
        case Kind::Trend: {
            const auto cut =
                static_cast<std::size_t>(std::floor(static_cast<double>(n) * breakpoints_[0]));
            if (i <= cut) return levels_[0];
            return trend_(static_cast<double>(i) / static_cast<double>(n));
        }
    }
    return 0.0;
}

double MeanSpec::mean_integral(double t) const {
    switch (kind_) {
        case Kind::Constant:
            return levels_[0] * t;
        case Kind::Single:
        case Kind::Multi: {
            double acc = 0.0;
            double lo = 0.0;
            for (std::size_t seg = 0; seg < breakpoints_.size(); ++seg) {
                const double hi = breakpoints_[seg];
                if (t <= hi) return acc + levels_[seg] * (t - lo);
                acc += levels_[seg] * (hi - lo);
                lo = hi;
            }
            return acc + levels_.back() * (t - lo);
        }
        case Kind::Trend: {
            const double theta = breakpoints_[0];
            if (t <= theta) return levels_[0] * t;
            return levels_[0] * theta + detail::integrate(trend_, theta, t);
        }
    }
    return 0.0;
}

double MeanSpec::drift(double t) const {
    if (kind_ == Kind::Constant) return 0.0;
    return mean_integral(t) - t * mean_integral(1.0);
}

std::vector<double> MeanSpec::drift_profile(std::span<const double> grid) const {
    std::vector<double> out;
    out.reserve(grid.size());
    for (double t : grid) {
        if (!(t >= 0.0 && t <= 1.0)) {
            throw std::invalid_argument("drift profile grid point outside [0, 1]");
        }
        out.push_back(drift(t));
    }
    return out;
}

double MeanSpec::drift_l2() const {
    if (kind_ == Kind::Constant) return 0.0;
    const auto d2 = [this](double t) {
        const double d = drift(t);
        return d * d;
    };
    // Split at the breakpoints where d has kinks.
    double acc = 0.0;
    double lo = 0.0;
    for (double b : breakpoints_) {
        acc += detail::integrate(d2, lo, b);
        lo = b;
    }
    acc += detail::integrate(d2, lo, 1.0);
    return acc;
}

}  // namespace hcpd
