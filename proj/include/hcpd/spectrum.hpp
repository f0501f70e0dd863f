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
#include <string>
#include <vector>

#include "hcpd/kernel.hpp"

namespace hcpd {

enum class SpectrumSource {
    Theoretical,
    EmpiricalUncorrelated,
    EmpiricalCorrelated,
    ClassicalCM,
    ClassicalAD,
    VS,
};

std::string spectrum_source_name(SpectrumSource s);

/// Eigenvalue weights of a weighted chi-square limit law, descending and
/// nonnegative. dof is the chi-square degrees of freedom of each term
/// (1 for the CUSUM functionals, 2 for the VS statistic).
struct Spectrum {
    std::vector<double> weights;
    SpectrumSource source = SpectrumSource::Theoretical;
    int dof = 1;
    double clipped_mass = 0.0;  // |sum of negative eigenvalues| set to zero

    std::size_t size() const { return weights.size(); }
    double total() const;
};

/// All eigenvalues of the Nystrom matrix M/G, descending, unclipped.
/// Test hooks and diagnostics; the testing path uses eigenvalues() below.
std::vector<double> all_eigenvalues(const CovKernel& k);

/// Nystrom approximation with uniform weights 1/G: eigendecompose M/G,
/// clip negatives to zero, sort descending, keep the top m.
Spectrum eigenvalues(const CovKernel& k, std::size_t m, SpectrumSource source);

/// Smallest m capturing 99.9% of the positive eigenvalue mass, capped at
/// kMaxAutoTerms; used when no m is requested.
std::size_t auto_num_terms(const std::vector<double>& descending_weights);

inline constexpr std::size_t kMaxAutoTerms = 100;

}  // namespace hcpd
