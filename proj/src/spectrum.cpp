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

#include "hcpd/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <stdexcept>

#include "hcpd/errors.hpp"
#include "hcpd/math_util.hpp"

namespace hcpd {

std::string spectrum_source_name(SpectrumSource s) {
    switch (s) {
        case SpectrumSource::Theoretical: return "theoretical";
        case SpectrumSource::EmpiricalUncorrelated: return "empirical-uncorrelated";
        case SpectrumSource::EmpiricalCorrelated: return "empirical-correlated";
        case SpectrumSource::ClassicalCM: return "classical-CM";
        case SpectrumSource::ClassicalAD: return "classical-AD";
        case SpectrumSource::VS: return "VS";
    }
    return "unknown";
}

double Spectrum::total() const {
    KahanSum acc;
    for (double w : weights) acc.add(w);
    return acc.value();
}

std::vector<double> all_eigenvalues(const CovKernel& k) {
    const auto g = static_cast<double>(k.size());
    if (k.size() == 0) throw std::invalid_argument("kernel is empty");

    // Nystrom with uniform weights: eigenvalues of M/G. The matrix is
    // symmetric by construction, so the self-adjoint solver applies directly.
    Eigen::MatrixXd scaled = k.values / g;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(scaled, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("symmetric eigensolver did not converge");
    }
    std::vector<double> out(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(out.begin(), out.end(), std::greater<double>());
    return out;
}

Spectrum eigenvalues(const CovKernel& k, std::size_t m, SpectrumSource source) {
    if (m < 1 || m > k.size()) {
        throw std::invalid_argument("number of eigenvalues must satisfy 1 <= m <= G");
    }
    auto all = all_eigenvalues(k);

    Spectrum sp;
    sp.source = source;
    for (double& v : all) {
        if (v < 0.0) {
            sp.clipped_mass += -v;
            v = 0.0;
        }
    }
    sp.weights.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(m));
    return sp;
}

std::size_t auto_num_terms(const std::vector<double>& descending_weights) {
    KahanSum total;
    for (double w : descending_weights) {
        if (w > 0.0) total.add(w);
    }
    if (total.value() <= 0.0) return 1;
    const double target = 0.999 * total.value();
    KahanSum partial;
    std::size_t m = 0;
    for (double w : descending_weights) {
        if (m >= kMaxAutoTerms) break;
        partial.add(std::max(w, 0.0));
        ++m;
        if (partial.value() >= target) break;
    }
    return std::max<std::size_t>(m, 1);
}

}  // namespace hcpd
