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

#include "hcpd/lrv.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hcpd/math_util.hpp"

namespace hcpd {

void LrvConfig::validate() const {
    if (!(bandwidth >= 1.0)) throw std::invalid_argument("bandwidth h must be >= 1");
    if (!(support > 0.0)) throw std::invalid_argument("kernel support must be positive");
    if (kernel == KernelId::Custom) {
        if (table.size() < 2) throw std::invalid_argument("custom kernel table needs >= 2 points");
        if (table.front() != 1.0) throw std::invalid_argument("custom kernel must have K(0) = 1");
        for (double v : table) {
            if (!std::isfinite(v) || v < 0.0) {
                throw std::invalid_argument("custom kernel values must be finite and >= 0");
            }
        }
    }
}

double LrvConfig::default_bandwidth(std::size_t n) {
    return std::max(1.0, std::floor(std::cbrt(static_cast<double>(n))));
}

double kernel_weight(const LrvConfig& cfg, double u) {
    const double au = std::abs(u);
    switch (cfg.kernel) {
        case KernelId::Bartlett:
            return std::max(0.0, 1.0 - au);
        case KernelId::Parzen:
            if (au <= 0.5) return 1.0 - 6.0 * au * au + 6.0 * au * au * au;
            if (au <= 1.0) {
                const double w = 1.0 - au;
                return 2.0 * w * w * w;
            }
            return 0.0;
        case KernelId::Custom: {
            if (au > cfg.support) return 0.0;
            const double step = cfg.support / static_cast<double>(cfg.table.size() - 1);
            const double pos = au / step;
            const auto lo = static_cast<std::size_t>(pos);
            if (lo + 1 >= cfg.table.size()) return cfg.table.back();
            const double frac = pos - static_cast<double>(lo);
            return cfg.table[lo] * (1.0 - frac) + cfg.table[lo + 1] * frac;
        }
    }
    return 0.0;
}

double autocov_partial(const Series& s, std::size_t k, long lag) {
    const std::size_t n = s.size();
    if (k < 1 || k > n) throw std::invalid_argument("partial-sample size k must satisfy 1 <= k <= N");
    if (static_cast<std::size_t>(std::abs(lag)) >= k) {
        throw std::invalid_argument("autocovariance lag must satisfy |lag| < k");
    }
    const auto dev = s.centered();
    KahanSum acc;
    if (lag >= 0) {
        const auto l = static_cast<std::size_t>(lag);
        for (std::size_t i = 0; i + l < k; ++i) acc.add(dev[i] * dev[i + l]);
    } else {
        const auto l = static_cast<std::size_t>(-lag);
        for (std::size_t i = l; i < k; ++i) acc.add(dev[i] * dev[i - l]);
    }
    return acc.value() / static_cast<double>(n);
}

double lrv_partial(const Series& s, std::size_t k, const LrvConfig& cfg) {
    cfg.validate();
    const std::size_t n = s.size();
    if (k < 1 || k > n) throw std::invalid_argument("partial-sample size k must satisfy 1 <= k <= N");
    const auto max_lag = static_cast<std::size_t>(
        std::min(static_cast<double>(k - 1), std::ceil(cfg.support * cfg.bandwidth)));
    KahanSum acc;
    acc.add(kernel_weight(cfg, 0.0) * autocov_partial(s, k, 0));
    for (std::size_t l = 1; l <= max_lag; ++l) {
        const double w = kernel_weight(cfg, static_cast<double>(l) / cfg.bandwidth);
        if (w == 0.0) continue;
        acc.add(w * autocov_partial(s, k, static_cast<long>(l)));
        acc.add(w * autocov_partial(s, k, -static_cast<long>(l)));
    }
    return acc.value();
}

std::vector<double> lrv_path(const Series& s, const LrvConfig& cfg) {
    cfg.validate();
    const std::size_t n = s.size();
    const auto dev = s.centered();
    const auto max_lag = static_cast<std::size_t>(
        std::min(static_cast<double>(n - 1), std::ceil(cfg.support * cfg.bandwidth)));

    std::vector<double> weights(max_lag + 1);
    for (std::size_t l = 0; l <= max_lag; ++l) {
        weights[l] = kernel_weight(cfg, static_cast<double>(l) / cfg.bandwidth);
    }

    // Running lag sums T_l(k) = sum_{i <= k-l} dev_i dev_{i+l}. The negative
    // lag branch covers the same index pairs, so each l > 0 enters twice.
    std::vector<KahanSum> lag_sums(max_lag + 1);
    std::vector<double> path(n + 1, 0.0);
    for (std::size_t k = 1; k <= n; ++k) {
        const double x = dev[k - 1];
        const std::size_t reach = std::min(max_lag, k - 1);
        for (std::size_t l = 0; l <= reach; ++l) lag_sums[l].add(dev[k - 1 - l] * x);

        KahanSum g;
        g.add(weights[0] * lag_sums[0].value());
        for (std::size_t l = 1; l <= reach; ++l) {
            if (weights[l] == 0.0) continue;
            g.add(2.0 * weights[l] * lag_sums[l].value());
        }
        path[k] = g.value() / static_cast<double>(n);
    }
    return path;
}

double sample_variance(const Series& s) {
    const auto dev = s.centered();
    KahanSum acc;
    for (double d : dev) acc.add(d * d);
    return acc.value() / static_cast<double>(s.size());
}

std::pair<double, bool> lrv_floor(double value, double variance) {
    if (value > 0.0) return {value, false};
    return {1e-12 * variance, true};
}

}  // namespace hcpd
