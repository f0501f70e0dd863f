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
#include <cstdint>
#include <string>

#include "hcpd/mean_spec.hpp"
#include "hcpd/methods.hpp"
#include "hcpd/series.hpp"

namespace hcpd {

/// Error processes of the simulation study. The "abs" and "sq" variants are
/// GARCH innovations recentred as |R| - E|R| and R^2 - E R^2.
enum class DgpBase { GaussianIid, Ar1, Garch, GarchAbs, GarchSq };

/// Deterministic scale profiles a_i applied to the errors.
enum class ScaleProfile { None, A1, A2, A3, A4, Sin };

double scale_profile_at(ScaleProfile p, std::size_t i, std::size_t n);  // 1-based i

struct DgpSpec {
    DgpBase base = DgpBase::GaussianIid;
    double rho = 0.0;                     // AR(1)
    double omega = 1e-6, alpha = 0.2, beta = 0.5;  // GARCH(1,1)
    ScaleProfile profile = ScaleProfile::None;
    MeanSpec mean = MeanSpec::constant();
    std::size_t n = 0;

    void validate() const;
    std::string label() const;  // canonical text form, e.g. "garch:1e-06:0.2:0.5|a1|none"
};

inline constexpr std::size_t kBurnIn = 1000;

/// GARCH(1,1): R_i = sigma_i eps_i, sigma_i^2 = omega + alpha R_{i-1}^2 +
/// beta sigma_{i-1}^2, started at the stationary variance with kBurnIn
/// discarded draws. Requires omega > 0, alpha, beta >= 0, alpha + beta < 1.
Series gen_garch(std::size_t n, double omega, double alpha, double beta, std::uint64_t seed);

/// AR(1) with N(0,1) innovations, stationary start plus burn-in. |rho| < 1.
Series gen_ar1(std::size_t n, double rho, std::uint64_t seed);

Series gen_gaussian(std::size_t n, std::uint64_t seed);

/// X_i = mu_i + a_i e_i where e is the (possibly recentred) base series.
/// Centering constants E|R| and E R^2 are estimated once per GARCH
/// parameter triple from a long pre-run and cached.
Series apply_profile(const Series& base, const DgpSpec& spec);

/// Generate a full replication of the DGP.
Series make_series(const DgpSpec& spec, std::uint64_t seed);

struct RejectionResult {
    double rate = 0.0;
    double mc_stderr = 0.0;
    std::size_t replications = 0;   // successful
    std::size_t degenerate = 0;     // rejected as degenerate input
};

/// Fraction of replications with P-value below level. Per-replication seeds
/// derive deterministically from (seed, index); replications run in
/// parallel. Requires reps >= 100.
RejectionResult rejection_rate(const DgpSpec& spec, MethodId method, const TestConfig& cfg,
                               double level, std::size_t reps, std::uint64_t seed);

}  // namespace hcpd
