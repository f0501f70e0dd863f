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

#include <Eigen/Dense>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <vector>

#include "hcpd/lrv.hpp"
#include "hcpd/series.hpp"

namespace hcpd {

/// A covariance kernel discretized on the midpoint grid t_j = (j - 1/2) / G.
/// The matrix is symmetric by construction (upper triangle mirrored).
struct CovKernel {
    std::vector<double> grid;
    Eigen::MatrixXd values;
    bool weighted = false;       // true after Anderson-Darling weighting
    std::size_t floored = 0;     // long-run variance path entries floored

    std::size_t size() const { return grid.size(); }
};

/// Error scale profile: errors u_i = a(i/N) e_i with sd(e) = sigma. The
/// profile a must have bounded variation; jump locations can be listed in
/// breakpoints so the clock integral is evaluated exactly piecewise.
struct VarianceProfile {
    std::function<double(double)> a;
    double sigma = 1.0;
    std::vector<double> breakpoints;
};

/// Grid size used when none is requested: min(N, 256).
std::size_t default_grid_size(std::size_t n);

/// Limit kernel C(t,s) = b(min(t,s)) - t b(s) - s b(t) + t s b(1) with clock
/// b(t) = sigma^2 int_0^t a^2. The clock is integrated by adaptive
/// quadrature, split at the profile's breakpoints. Requires G >= 16.
CovKernel theoretical_kernel(const VarianceProfile& p, std::size_t grid_size);

/// Estimate for uncorrelated errors, built from the running sum of squared
/// deviations H_N(u) = (1/N) sum_{i<=floor(Nu)} (X_i - mean)^2.
CovKernel empirical_kernel_uncorrelated(const Series& s, std::size_t grid_size);

/// Estimate for correlated errors, built from the partial-sample long-run
/// variance path g[floor(Nu)]. Nonpositive path values are floored and
/// counted in the result.
CovKernel empirical_kernel_correlated(const Series& s, const LrvConfig& cfg,
                                      std::size_t grid_size);

/// Divide by sqrt(t(1-t) s(1-s)) entrywise, turning the Cramer-von Mises
/// kernel into the Anderson-Darling one. The midpoint grid keeps the
/// weights finite.
CovKernel ad_weight_kernel(const CovKernel& k);

/// Debug dump: one header line with G, then G comma-separated rows.
void write_kernel_csv(const CovKernel& k, std::ostream& out);

}  // namespace hcpd
