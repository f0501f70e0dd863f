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
#include <vector>

#include "hcpd/series.hpp"

namespace hcpd {

enum class CusumVariant {
    Standard,  // steps at k/N, zero at t=0 but not tied down near t=1
    TiedDown,  // steps at j/(N+1), zero in a neighborhood of both endpoints
};

/// The CUSUM path stored as step values on a uniform partition of [0, 1].
///
/// For Standard, z[k] is the value on [k/N, (k+1)/N), k = 0..N-1, and z[N] is
/// the (zero) value at t = 1. For TiedDown, z[j] is the value on
/// [j/(N+1), (j+1)/(N+1)), j = 0..N, with z[0] = z[N] = 0.
struct CusumProcess {
    std::vector<double> z;  // N + 1 step values
    std::size_t n = 0;
    CusumVariant variant = CusumVariant::Standard;
};

/// Z_N(t) = N^{-1/2} (sum_{l<=floor(Nt)} X_l - (floor(Nt)/N) sum_{l<=N} X_l),
/// evaluated exactly at its jump points.
CusumProcess cusum_process(const Series& s);

/// The tied-down variant, indexed by floor((N+1)u).
CusumProcess cusum_tied(const Series& s);

/// Integral of Z_N^2 over [0, 1], exact for the step path: (1/N) sum z[k]^2.
/// Standard variant only.
double cm_statistic(const CusumProcess& c);

/// Integral of Z^2(t) / (t (1 - t)), exact on each step via the log
/// antiderivative. Standard variant integrates over [1/N, 1 - 1/N]; tied-down
/// over (0, 1), where the zero end segments kill the singularity.
double ad_statistic(const CusumProcess& c);

}  // namespace hcpd
