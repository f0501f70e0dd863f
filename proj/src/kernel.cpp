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

#include "hcpd/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "hcpd/math_util.hpp"
#include "quadrature.hpp"

namespace hcpd {

namespace {

std::vector<double> midpoint_grid(std::size_t grid_size) {
    std::vector<double> grid(grid_size);
    for (std::size_t j = 0; j < grid_size; ++j) {
        grid[j] = (static_cast<double>(j) + 0.5) / static_cast<double>(grid_size);
    }
    return grid;
}

// Assembles the bridge-type kernel b(min) - t b(s) - s b(t) + t s b(1) from
// path values at the grid. Upper triangle computed, then mirrored.
CovKernel assemble(std::vector<double> grid, const std::vector<double>& path_at_grid,
                   double path_at_one) {
    const std::size_t g = grid.size();
    CovKernel out;
    out.values.resize(static_cast<Eigen::Index>(g), static_cast<Eigen::Index>(g));
    for (std::size_t j = 0; j < g; ++j) {
        for (std::size_t k = j; k < g; ++k) {
            const double t = grid[j];
            const double s = grid[k];
            const double v =
                path_at_grid[j] - t * path_at_grid[k] - s * path_at_grid[j] + t * s * path_at_one;
            out.values(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = v;
            out.values(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = v;
        }
    }
    out.grid = std::move(grid);
    return out;
}

// Evaluate a step path p[0..N] at the grid via floor(N t).
std::vector<double> path_at_grid_points(const std::vector<double>& path, std::size_t n,
                                        const std::vector<double>& grid) {
    std::vector<double> out(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        auto idx = static_cast<std::size_t>(std::floor(static_cast<double>(n) * grid[j]));
        idx = std::min(idx, n);
        out[j] = path[idx];
    }
    return out;
}

}  // namespace

std::size_t default_grid_size(std::size_t n) { return std::min<std::size_t>(n, 256); }

CovKernel theoretical_kernel(const VarianceProfile& p, std::size_t grid_size) {
    if (grid_size < 16) throw std::invalid_argument("theoretical kernel needs a grid of >= 16");
    if (!p.a) throw std::invalid_argument("variance profile has no scale function");
    if (!(p.sigma > 0.0)) throw std::invalid_argument("sigma must be positive");

    auto grid = midpoint_grid(grid_size);

    // Clock b(t) = sigma^2 int_0^t a^2, accumulated cell by cell and split at
    // the profile's jump points so piecewise-constant profiles are exact.
    std::vector<double> cuts = p.breakpoints;
    std::sort(cuts.begin(), cuts.end());
    const double sigma2 = p.sigma * p.sigma;
    const auto a2 = [&p](double u) {
        const double v = p.a(u);
        return v * v;
    };
    const auto integrate_cell = [&](double lo, double hi) {
        double acc = 0.0;
        for (double c : cuts) {
            if (c <= lo || c >= hi) continue;
            acc += detail::integrate(a2, lo, c);
            lo = c;
        }
        return acc + detail::integrate(a2, lo, hi);
    };

    std::vector<double> clock(grid_size);
    double running = 0.0;
    double prev = 0.0;
    for (std::size_t j = 0; j < grid_size; ++j) {
        running += integrate_cell(prev, grid[j]);
        clock[j] = sigma2 * running;
        prev = grid[j];
    }
    const double clock_at_one = sigma2 * (running + integrate_cell(prev, 1.0));

    return assemble(std::move(grid), clock, clock_at_one);
}

CovKernel empirical_kernel_uncorrelated(const Series& s, std::size_t grid_size) {
    if (grid_size < 1) throw std::invalid_argument("grid size must be positive");
    const std::size_t n = s.size();
    const auto dev = s.centered();

    // H(k/N) = (1/N) sum_{i<=k} dev_i^2.
    std::vector<double> h(n + 1, 0.0);
    KahanSum acc;
    for (std::size_t k = 0; k < n; ++k) {
        acc.add(dev[k] * dev[k]);
        h[k + 1] = acc.value() / static_cast<double>(n);
    }

    auto grid = midpoint_grid(grid_size);
    const auto at_grid = path_at_grid_points(h, n, grid);
    return assemble(std::move(grid), at_grid, h[n]);
}

CovKernel empirical_kernel_correlated(const Series& s, const LrvConfig& cfg,
                                      std::size_t grid_size) {
    if (grid_size < 1) throw std::invalid_argument("grid size must be positive");
    const std::size_t n = s.size();
    const double variance = sample_variance(s);

    auto path = lrv_path(s, cfg);
    std::size_t floored = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        const auto [value, was_floored] = lrv_floor(path[k], variance);
        path[k] = value;
        floored += was_floored ? 1 : 0;
    }

    auto grid = midpoint_grid(grid_size);
    const auto at_grid = path_at_grid_points(path, n, grid);
    CovKernel out = assemble(std::move(grid), at_grid, path[n]);
    out.floored = floored;
    return out;
}

CovKernel ad_weight_kernel(const CovKernel& k) {
    if (k.weighted) throw std::invalid_argument("kernel is already Anderson-Darling weighted");
    const std::size_t g = k.size();
    std::vector<double> root_weight(g);
    for (std::size_t j = 0; j < g; ++j) {
        const double t = k.grid[j];
        if (!(t > 0.0 && t < 1.0)) {
            throw std::invalid_argument("Anderson-Darling weighting needs a grid inside (0, 1)");
        }
        root_weight[j] = std::sqrt(t * (1.0 - t));
    }
    CovKernel out = k;
    out.weighted = true;
    for (std::size_t j = 0; j < g; ++j) {
        for (std::size_t c = 0; c < g; ++c) {
            out.values(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(c)) /=
                root_weight[j] * root_weight[c];
        }
    }
    return out;
}

void write_kernel_csv(const CovKernel& k, std::ostream& out) {
    const std::size_t g = k.size();
    out << g << "\n";
    out.precision(17);
    for (std::size_t j = 0; j < g; ++j) {
        for (std::size_t c = 0; c < g; ++c) {
            if (c) out << ",";
            out << k.values(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(c));
        }
        out << "\n";
    }
}

}  // namespace hcpd
