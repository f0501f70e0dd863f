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

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "hcpd/errors.hpp"

namespace hcpd::detail {

/// Adaptive Gauss-Kronrod on [a, b]; throws ConvergenceError when the
/// error estimate fails both the absolute and relative targets.
template <typename F>
double integrate(const F& f, double a, double b, double abs_tol = 1e-12) {
    if (!(b > a)) return 0.0;
    double error = 0.0;
    const double result = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        f, a, b, 12, 1e-12, &error);
    if (!std::isfinite(result) || error > abs_tol + 1e-9 * std::abs(result)) {
        throw ConvergenceError("quadrature did not converge on [" + std::to_string(a) + ", " +
                               std::to_string(b) + "]");
    }
    return result;
}

}  // namespace hcpd::detail
