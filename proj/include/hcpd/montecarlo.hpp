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
#include <vector>

#include "hcpd/spectrum.hpp"

namespace hcpd {

/// Sorted Monte Carlo sample of a weighted chi-square law.
struct LimitSample {
    std::vector<double> draws;  // ascending
    std::uint64_t seed = 0;
    int dof = 1;

    std::size_t size() const { return draws.size(); }
};

inline constexpr std::size_t kDefaultReplications = 10'000;
inline constexpr std::size_t kOracleReplications = 1'000'000;

/// R iid draws of sum_i w_i Q_i with Q_i iid chi-square(dof). Deterministic
/// given (spectrum, R, dof, seed) regardless of thread count. Requires
/// R >= 1000 and dof in {1, 2}.
LimitSample sample_weighted_chisq(const Spectrum& sp, std::size_t replications, int dof,
                                  std::uint64_t seed);

/// min{x : P(H >= x) <= alpha} over the empirical law of the sample, i.e.
/// the sorted draw at index ceil((1 - alpha) R) - 1.
double critical_value(const LimitSample& ls, double alpha);

/// Fraction of draws strictly above the observed statistic. The corrected
/// variant returns (1 + #exceeding) / (R + 1).
double p_value(const LimitSample& ls, double observed, bool corrected = false);

enum class Functional { CM, AD };

/// Limit spectra of the homoskedastic statistics: 1/(k^2 pi^2) for the
/// Cramer-von Mises functional, 1/(k (k+1)) for Anderson-Darling; dof 1.
Spectrum classical_limit_spectrum(Functional f, std::size_t m);

/// Limit spectrum of the VS statistic: 1/(4 pi^2 k^2) with chi-square(2)
/// terms.
Spectrum vs_limit_spectrum(std::size_t m);

}  // namespace hcpd
