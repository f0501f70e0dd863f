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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcpd/lrv.hpp"
#include "hcpd/montecarlo.hpp"
#include "hcpd/series.hpp"
#include "hcpd/spectrum.hpp"

namespace hcpd {

/// The ten test procedures. Naming: Standard/Heteroskedastic error scale,
/// Uncorrelated/Correlated errors, Cramer-von Mises/Anderson-Darling
/// functional; VS is the variance-ratio statistic in both flavors.
enum class MethodId { SUCM, SCCM, HUCM, HCCM, SUAD, SCAD, HUAD, HCAD, VSU, VSC };

inline constexpr std::array<MethodId, 10> kAllMethods = {
    MethodId::SUCM, MethodId::SCCM, MethodId::HUCM, MethodId::HCCM, MethodId::SUAD,
    MethodId::SCAD, MethodId::HUAD, MethodId::HCAD, MethodId::VSU,  MethodId::VSC,
};

std::string method_name(MethodId m);
std::optional<MethodId> parse_method(const std::string& name);

/// Knobs for a single test run. Zeros mean "resolve a default from N".
struct TestConfig {
    std::size_t grid_size = 0;          // G; 0 -> min(N, 256)
    std::size_t num_terms = 0;          // m; 0 -> 99.9% mass rule / 200 classical
    double bandwidth = 0.0;             // h; 0 -> floor(N^(1/3))
    KernelId kernel = KernelId::Bartlett;
    std::size_t replications = 0;       // R; 0 -> 10000
    std::uint64_t seed = 12345;
    bool pvalue_correction = false;     // (1 + #)/(R + 1) instead of #/R
};

/// Config with every default filled in for a sample of length n.
struct ResolvedConfig {
    std::size_t grid_size = 0;
    std::size_t num_terms = 0;          // 0 when the mass rule decides per kernel
    double bandwidth = 0.0;
    KernelId kernel = KernelId::Bartlett;
    std::size_t replications = 0;
    std::uint64_t seed = 0;
    bool pvalue_correction = false;
};

ResolvedConfig resolve_config(const TestConfig& cfg, std::size_t n);

inline constexpr std::array<double, 3> kReportLevels = {0.10, 0.05, 0.01};

struct TestReport {
    MethodId method = MethodId::SUCM;
    double statistic = 0.0;
    double p_value = 0.0;
    std::array<double, 3> critical_values{};  // at levels 0.10, 0.05, 0.01
    SpectrumSource spectrum_source = SpectrumSource::ClassicalCM;
    std::size_t spectrum_terms = 0;           // m actually used
    ResolvedConfig config;
    std::vector<std::string> warnings;
};

/// One JSON object per report, fields in fixed schema order.
std::string report_to_json(const TestReport& r);

/// Run one of the ten procedures. Throws DegenerateInputError when the
/// sample variance is zero.
TestReport run_test(const Series& s, MethodId method, const TestConfig& cfg);

/// Variance-ratio statistic: (1 / (divisor N^2)) sum_k (S'_k - mean(S'))^2
/// over partial sums S'_k of the centered observations. divisor > 0.
double vs_statistic(const Series& s, double divisor);

namespace detail {

/// Statistic, spectrum, and divisor bookkeeping for a method, before any
/// Monte Carlo calibration. Exposed so batch drivers can reuse a single
/// limit sample for the data-independent spectra.
struct StatisticParts {
    double statistic = 0.0;
    Spectrum spectrum;
    std::vector<std::string> warnings;
};

StatisticParts compute_statistic_parts(const Series& s, MethodId method,
                                       const ResolvedConfig& cfg);

/// True when the method's limit spectrum does not depend on the data.
bool has_fixed_spectrum(MethodId method);

/// The data-independent spectrum of an S- or VS-method; num_terms == 0
/// picks the classical default of 200 terms.
Spectrum fixed_spectrum(MethodId method, std::size_t num_terms);

TestReport finish_report(const Series& s, MethodId method, const ResolvedConfig& cfg,
                         StatisticParts parts, const LimitSample& sample);

}  // namespace detail

}  // namespace hcpd
