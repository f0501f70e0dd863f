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

#include "hcpd/regression.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hcpd/errors.hpp"

namespace hcpd {

namespace {

constexpr double kConditionLimit = 1e12;

Eigen::VectorXd to_vector(const Series& s) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) v(static_cast<Eigen::Index>(i)) = s[i];
    return v;
}

Series to_series(const Eigen::VectorXd& v) {
    return Series(std::vector<double>(v.data(), v.data() + v.size()));
}

double sum_of_squares(const Eigen::VectorXd& r) { return r.squaredNorm(); }

}  // namespace

Series ols_residuals(const Series& x, const Eigen::MatrixXd& design) {
    if (design.rows() != static_cast<Eigen::Index>(x.size())) {
        throw std::invalid_argument("design matrix rows must match the series length");
    }
    if (design.cols() < 1 || design.cols() >= design.rows()) {
        throw std::invalid_argument("design matrix needs 1 <= p < N columns");
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double smallest = sv(sv.size() - 1);
    if (!(smallest > 0.0) || sv(0) / smallest > kConditionLimit) {
        throw std::invalid_argument("design matrix is rank deficient (condition above 1e12)");
    }

    const Eigen::VectorXd y = to_vector(x);
    const Eigen::VectorXd beta = svd.solve(y);
    return to_series(y - design * beta);
}

NlsFit nls_residuals(const Series& x, const Eigen::MatrixXd& covariates, const NlsModel& model,
                     std::span<const double> theta0, const NlsOptions& options) {
    if (!model) throw std::invalid_argument("model function is empty");
    if (theta0.empty()) throw std::invalid_argument("initial parameter vector is empty");
    if (covariates.rows() != 0 && covariates.rows() != static_cast<Eigen::Index>(x.size())) {
        throw std::invalid_argument("covariate rows must match the series length");
    }
    for (double t : theta0) {
        if (!std::isfinite(t)) throw std::invalid_argument("initial parameters must be finite");
    }

    const auto n = static_cast<Eigen::Index>(x.size());
    const auto p = static_cast<Eigen::Index>(theta0.size());
    const Eigen::VectorXd y = to_vector(x);

    std::vector<double> row_storage(static_cast<std::size_t>(std::max<Eigen::Index>(covariates.cols(), 0)));
    const auto predict = [&](const Eigen::VectorXd& theta, Eigen::Index i) {
        for (Eigen::Index c = 0; c < covariates.cols(); ++c) {
            row_storage[static_cast<std::size_t>(c)] = covariates(i, c);
        }
        return model(std::span<const double>(row_storage),
                     std::span<const double>(theta.data(), static_cast<std::size_t>(p)));
    };
    const auto residual_vector = [&](const Eigen::VectorXd& theta) {
        Eigen::VectorXd r(n);
        for (Eigen::Index i = 0; i < n; ++i) r(i) = y(i) - predict(theta, i);
        return r;
    };

    Eigen::VectorXd theta(p);
    for (Eigen::Index j = 0; j < p; ++j) theta(j) = theta0[static_cast<std::size_t>(j)];

    Eigen::VectorXd residual = residual_vector(theta);
    double objective = sum_of_squares(residual);

    const auto fail = [&](const std::string& why) {
        throw ConvergenceError("nonlinear least squares did not converge: " + why,
                               std::vector<double>(theta.data(), theta.data() + p));
    };
    if (!std::isfinite(objective)) fail("objective not finite at the initial parameters");

    int iter = 0;
    for (; iter < options.max_iterations; ++iter) {
        // Forward-difference Jacobian of the model values.
        Eigen::MatrixXd jac(n, p);
        for (Eigen::Index j = 0; j < p; ++j) {
            const double step = std::sqrt(std::numeric_limits<double>::epsilon()) *
                                (1.0 + std::abs(theta(j)));
            Eigen::VectorXd bumped = theta;
            bumped(j) += step;
            for (Eigen::Index i = 0; i < n; ++i) {
                jac(i, j) = (predict(bumped, i) - predict(theta, i)) / step;
            }
        }
        if (!jac.allFinite()) fail("Jacobian not finite");

        // Gauss-Newton direction: minimize |residual - J delta|^2.
        const Eigen::VectorXd delta = jac.colPivHouseholderQr().solve(residual);
        if (!delta.allFinite()) fail("normal equations produced a non-finite step");

        // Halve the step until the objective decreases.
        double lambda = 1.0;
        double next_objective = std::numeric_limits<double>::infinity();
        Eigen::VectorXd next_theta;
        bool improved = false;
        for (int half = 0; half <= options.max_step_halvings; ++half) {
            next_theta = theta + lambda * delta;
            const Eigen::VectorXd next_residual = residual_vector(next_theta);
            next_objective = sum_of_squares(next_residual);
            if (std::isfinite(next_objective) && next_objective < objective) {
                residual = next_residual;
                improved = true;
                break;
            }
            lambda *= 0.5;
        }

        const double step_norm = (lambda * delta).norm();
        if (!improved) {
            if (step_norm < options.step_tolerance) break;  // stationary
            fail("no decrease after " + std::to_string(options.max_step_halvings) +
                 " step halvings");
        }

        theta = next_theta;
        const double decrease = (objective - next_objective) / std::max(objective, 1e-300);
        objective = next_objective;
        if (step_norm < options.step_tolerance || decrease < options.objective_tolerance) {
            ++iter;
            break;
        }
        if (iter + 1 == options.max_iterations) {
            fail("iteration budget of " + std::to_string(options.max_iterations) + " exhausted");
        }
    }

    NlsFit fit{to_series(residual),
               std::vector<double>(theta.data(), theta.data() + p), iter, objective};
    return fit;
}

}  // namespace hcpd
