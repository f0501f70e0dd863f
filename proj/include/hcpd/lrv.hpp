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
#include <utility>
#include <vector>

#include "hcpd/series.hpp"

namespace hcpd {

enum class KernelId { Bartlett, Parzen, Custom };

/// Lag-window configuration for the long-run variance estimator. The window
/// K must satisfy K(0) = 1, K even and nonnegative, K = 0 outside
/// [-support, support], and K Lipschitz (checked on a probe grid for custom
/// tables).
struct LrvConfig {
    KernelId kernel = KernelId::Bartlett;
    double bandwidth = 1.0;  // h >= 1
    double support = 1.0;    // c

    // Custom windows: values of K at abscissae 0, du, 2 du, ..., support,
    // linearly interpolated and mirrored to u < 0.
    std::vector<double> table;

    void validate() const;

    /// Default bandwidth floor(N^(1/3)), never below 1.
    static double default_bandwidth(std::size_t n);
};

/// Window weight K(u).
double kernel_weight(const LrvConfig& cfg, double u);

/// Partial-sample autocovariance at lag l from X_1..X_k, centered at the
/// full-sample mean and divided by N (not k). Requires |l| < k <= N.
double autocov_partial(const Series& s, std::size_t k, long lag);

/// Kernel long-run variance estimate from the partial sample X_1..X_k:
/// sum over |l| < k of K(l/h) times the partial autocovariance. Can be
/// nonpositive for pathological inputs; callers dividing by it apply
/// lrv_floor.
double lrv_partial(const Series& s, std::size_t k, const LrvConfig& cfg);

/// The whole family g[k] = lrv_partial(s, k, cfg) for k = 0..N (g[0] = 0),
/// computed incrementally in O(N h) total.
std::vector<double> lrv_path(const Series& s, const LrvConfig& cfg);

/// (1/N) sum (X_i - mean)^2.
double sample_variance(const Series& s);

/// Floors nonpositive long-run variance values at 1e-12 times the sample
/// variance so they stay usable as divisors and kernel ingredients.
/// Returns {floored value, whether the floor was applied}.
std::pair<double, bool> lrv_floor(double value, double variance);

}  // namespace hcpd
