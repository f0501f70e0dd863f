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

#include "hcpd/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hcpd/parallel.hpp"
#include "hcpd/rng.hpp"

namespace hcpd {

namespace {

constexpr std::size_t kChunk = 1 << 16;
constexpr double kPi = 3.14159265358979323846;

}  // namespace

LimitSample sample_weighted_chisq(const Spectrum& sp, std::size_t replications, int dof,
                                  std::uint64_t seed) {
    if (sp.weights.empty()) throw std::invalid_argument("spectrum has no weights");
    if (replications < 1000) throw std::invalid_argument("need at least 1000 replications");
    if (dof != 1 && dof != 2) throw std::invalid_argument("degrees of freedom must be 1 or 2");

    LimitSample out;
    out.seed = seed;
    out.dof = dof;
    out.draws.resize(replications);

    // Fixed-size chunks with per-chunk streams: the fill is bit-identical
    // whatever the thread count.
    const std::size_t chunks = (replications + kChunk - 1) / kChunk;
    const auto& weights = sp.weights;
    auto* draws = out.draws.data();
    parallel_for(chunks, [&](std::size_t c) {
        RngStream rng(mix_seed(seed, c));
        const std::size_t lo = c * kChunk;
        const std::size_t hi = std::min(lo + kChunk, replications);
        for (std::size_t r = lo; r < hi; ++r) {
            double sum = 0.0;
            if (dof == 1) {
                for (double w : weights) sum += w * rng.chisq1();
            } else {
                for (double w : weights) sum += w * rng.chisq2();
            }
            draws[r] = sum;
        }
    });

    std::sort(out.draws.begin(), out.draws.end());
    return out;
}

double critical_value(const LimitSample& ls, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
    const auto r = static_cast<double>(ls.draws.size());
    // min{x : P(H >= x) <= alpha} over the empirical law.
    auto index = static_cast<std::size_t>(std::ceil((1.0 - alpha) * r));
    index = std::min(std::max<std::size_t>(index, 1), ls.draws.size());
    return ls.draws[index - 1];
}

double p_value(const LimitSample& ls, double observed, bool corrected) {
    if (!(observed >= 0.0)) throw std::invalid_argument("observed statistic must be >= 0");
    const auto above = ls.draws.end() - std::upper_bound(ls.draws.begin(), ls.draws.end(), observed);
    const auto r = static_cast<double>(ls.draws.size());
    if (corrected) return (1.0 + static_cast<double>(above)) / (r + 1.0);
    return static_cast<double>(above) / r;
}

Spectrum classical_limit_spectrum(Functional f, std::size_t m) {
    if (m < 1) throw std::invalid_argument("spectrum needs m >= 1 terms");
    Spectrum sp;
    sp.dof = 1;
    sp.weights.resize(m);
    if (f == Functional::CM) {
        sp.source = SpectrumSource::ClassicalCM;
        for (std::size_t k = 1; k <= m; ++k) {
            const double kk = static_cast<double>(k);
            sp.weights[k - 1] = 1.0 / (kk * kk * kPi * kPi);
        }
    } else {
        sp.source = SpectrumSource::ClassicalAD;
        for (std::size_t k = 1; k <= m; ++k) {
            const double kk = static_cast<double>(k);
            sp.weights[k - 1] = 1.0 / (kk * (kk + 1.0));
        }
    }
    return sp;
}

Spectrum vs_limit_spectrum(std::size_t m) {
    if (m < 1) throw std::invalid_argument("spectrum needs m >= 1 terms");
    Spectrum sp;
    sp.source = SpectrumSource::VS;
    sp.dof = 2;
    sp.weights.resize(m);
    for (std::size_t k = 1; k <= m; ++k) {
        const double kk = static_cast<double>(k);
        sp.weights[k - 1] = 1.0 / (4.0 * kPi * kPi * kk * kk);
    }
    return sp;
}

}  // namespace hcpd
