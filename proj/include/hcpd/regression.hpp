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
#include <functional>
#include <span>
#include <vector>

#include "hcpd/series.hpp"

namespace hcpd {

/// Least-squares residuals X - design * beta_hat, for change point testing
/// in linear regression. The design must have full column rank (condition
/// number below 1e12).
Series ols_residuals(const Series& x, const Eigen::MatrixXd& design);

/// Model value h(x_row, theta). x_row may be empty for covariate-free models.
using NlsModel =
    std::function<double(std::span<const double> x_row, std::span<const double> theta)>;

struct NlsOptions {
    int max_iterations = 200;
    int max_step_halvings = 30;
    double step_tolerance = 1e-10;        // stop when the damped step is this small
    double objective_tolerance = 1e-12;   // or the relative decrease is this small
};

struct NlsFit {
    Series residuals;
    std::vector<double> theta;
    int iterations = 0;
    double objective = 0.0;
};

/// Minimize sum (X_i - h(x_i, theta))^2 by damped Gauss-Newton with a
/// forward-difference Jacobian. Throws ConvergenceError (carrying the last
/// iterate) when the iteration stalls or the budget is exhausted.
NlsFit nls_residuals(const Series& x, const Eigen::MatrixXd& covariates, const NlsModel& model,
                     std::span<const double> theta0, const NlsOptions& options = {});

}  // namespace hcpd
