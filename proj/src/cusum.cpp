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

#include "hcpd/cusum.hpp"

#include <cmath>
#include <stdexcept>

#include "hcpd/math_util.hpp"

namespace hcpd {

namespace {

// Partial sums of centered observations. S[k] = sum_{l<=k} (X_l - mean);
// using deviations instead of raw values makes the path exactly invariant
// under location shifts that leave the deviations unchanged.
std::vector<double> centered_partial_sums(const Series& s) {
    const auto dev = s.centered();
    std::vector<double> sums(dev.size() + 1, 0.0);
    KahanSum acc;
    for (std::size_t k = 0; k < dev.size(); ++k) {
        acc.add(dev[k]);
        sums[k + 1] = acc.value();
    }
    return sums;
}

}  // namespace

CusumProcess cusum_process(const Series& s) {
    const std::size_t n = s.size();
    const auto sums = centered_partial_sums(s);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    const double total = sums[n];  // ~0 up to rounding

    CusumProcess out;
    out.n = n;
    out.variant = CusumVariant::Standard;
    out.z.resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        const double frac = static_cast<double>(k) / static_cast<double>(n);
        out.z[k] = scale * (sums[k] - frac * total);
    }
    out.z[0] = 0.0;
    out.z[n] = 0.0;
    return out;
}

CusumProcess cusum_tied(const Series& s) {
    const std::size_t n = s.size();
    const auto sums = centered_partial_sums(s);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    const double total = sums[n];

    // Step j covers [j/(N+1), (j+1)/(N+1)); the index floor((N+1)u) equals j
    // there, so the same centered partial sums apply.
    CusumProcess out;
    out.n = n;
    out.variant = CusumVariant::TiedDown;
    out.z.resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        const double frac = static_cast<double>(j) / static_cast<double>(n);
        out.z[j] = scale * (sums[j] - frac * total);
    }
    out.z[0] = 0.0;
    out.z[n] = 0.0;
    return out;
}

double cm_statistic(const CusumProcess& c) {
    if (c.variant != CusumVariant::Standard) {
        throw std::invalid_argument("cm_statistic expects the standard CUSUM variant");
    }
    KahanSum acc;
    for (std::size_t k = 0; k < c.n; ++k) acc.add(c.z[k] * c.z[k]);
    return acc.value() / static_cast<double>(c.n);
}

double ad_statistic(const CusumProcess& c) {
    const std::size_t n = c.n;
    KahanSum acc;
    if (c.variant == CusumVariant::Standard) {
        // Integrate over [1/N, 1 - 1/N]: full steps k = 1..N-2.
        for (std::size_t k = 1; k + 1 < n; ++k) {
            const double zk = c.z[k];
            if (zk == 0.0) continue;
            const double lo = static_cast<double>(k) / static_cast<double>(n);
            const double hi = static_cast<double>(k + 1) / static_cast<double>(n);
            acc.add(zk * zk * (logit(hi) - logit(lo)));
        }
    } else {
        // Tied-down variant integrates over (0, 1); the end steps are zero,
        // which removes the boundary singularity.
        const double denom = static_cast<double>(n + 1);
        for (std::size_t j = 0; j <= n; ++j) {
            const double zj = c.z[j];
            if (zj == 0.0) continue;
            const double lo = static_cast<double>(j) / denom;
            const double hi = static_cast<double>(j + 1) / denom;
            acc.add(zj * zj * (logit(hi) - logit(lo)));
        }
    }
    return acc.value();
}

}  // namespace hcpd
