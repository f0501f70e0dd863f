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

#include "hcpd/methods.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hcpd/cusum.hpp"
#include "hcpd/errors.hpp"
#include "hcpd/kernel.hpp"
#include "hcpd/math_util.hpp"

namespace hcpd {

namespace {

constexpr std::size_t kClassicalTerms = 200;

std::string format_compact(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

std::string method_name(MethodId m) {
    switch (m) {
        case MethodId::SUCM: return "SUCM";
        case MethodId::SCCM: return "SCCM";
        case MethodId::HUCM: return "HUCM";
        case MethodId::HCCM: return "HCCM";
        case MethodId::SUAD: return "SUAD";
        case MethodId::SCAD: return "SCAD";
        case MethodId::HUAD: return "HUAD";
        case MethodId::HCAD: return "HCAD";
        case MethodId::VSU: return "VSU";
        case MethodId::VSC: return "VSC";
    }
    return "?";
}

std::optional<MethodId> parse_method(const std::string& name) {
    for (MethodId m : kAllMethods) {
        if (method_name(m) == name) return m;
    }
    return std::nullopt;
}

ResolvedConfig resolve_config(const TestConfig& cfg, std::size_t n) {
    ResolvedConfig r;
    r.grid_size = cfg.grid_size > 0 ? cfg.grid_size : default_grid_size(n);
    r.num_terms = cfg.num_terms;
    r.bandwidth = cfg.bandwidth > 0.0 ? cfg.bandwidth : LrvConfig::default_bandwidth(n);
    r.kernel = cfg.kernel;
    r.replications = cfg.replications > 0 ? cfg.replications : kDefaultReplications;
    r.seed = cfg.seed;
    r.pvalue_correction = cfg.pvalue_correction;
    return r;
}

double vs_statistic(const Series& s, double divisor) {
    if (!(divisor > 0.0)) throw std::invalid_argument("VS divisor must be positive");
    const std::size_t n = s.size();
    const auto dev = s.centered();

    std::vector<double> partial(n);
    KahanSum acc;
    for (std::size_t k = 0; k < n; ++k) {
        acc.add(dev[k]);
        partial[k] = acc.value();
    }
    const double mean_partial = kahan_total(partial) / static_cast<double>(n);
    KahanSum ss;
    for (double p : partial) {
        const double d = p - mean_partial;
        ss.add(d * d);
    }
    return ss.value() / (divisor * static_cast<double>(n) * static_cast<double>(n));
}

namespace detail {

bool has_fixed_spectrum(MethodId method) {
    switch (method) {
        case MethodId::SUCM:
        case MethodId::SCCM:
        case MethodId::SUAD:
        case MethodId::SCAD:
        case MethodId::VSU:
        case MethodId::VSC:
            return true;
        default:
            return false;
    }
}

Spectrum fixed_spectrum(MethodId method, std::size_t num_terms) {
    const std::size_t m = num_terms > 0 ? num_terms : kClassicalTerms;
    switch (method) {
        case MethodId::SUCM:
        case MethodId::SCCM:
            return classical_limit_spectrum(Functional::CM, m);
        case MethodId::SUAD:
        case MethodId::SCAD:
            return classical_limit_spectrum(Functional::AD, m);
        case MethodId::VSU:
        case MethodId::VSC:
            return vs_limit_spectrum(m);
        default:
            throw std::invalid_argument("method has a data-dependent spectrum");
    }
}

StatisticParts compute_statistic_parts(const Series& s, MethodId method,
                                       const ResolvedConfig& cfg) {
    const double variance = sample_variance(s);
    if (variance <= 0.0) {
        throw DegenerateInputError("sample variance is zero: constant series carries no signal");
    }

    LrvConfig lrv_cfg;
    lrv_cfg.kernel = cfg.kernel;
    lrv_cfg.bandwidth = cfg.bandwidth;
    lrv_cfg.support = 1.0;

    const std::size_t classical_m = cfg.num_terms > 0 ? cfg.num_terms : kClassicalTerms;

    StatisticParts parts;
    const auto hac_divisor = [&]() {
        const double raw = lrv_partial(s, s.size(), lrv_cfg);
        const auto [value, floored] = lrv_floor(raw, variance);
        if (floored) {
            parts.warnings.push_back("full-sample long-run variance " + format_compact(raw) +
                                     " floored at " + format_compact(value));
        }
        return value;
    };

    // Empirical spectra truncate by the 99.9% mass rule unless m was forced.
    const auto empirical_spectrum = [&](const CovKernel& kernel, SpectrumSource source) {
        const auto all = all_eigenvalues(kernel);
        std::size_t m = cfg.num_terms > 0 ? std::min(cfg.num_terms, all.size())
                                          : auto_num_terms(all);
        Spectrum sp = eigenvalues(kernel, m, source);
        if (kernel.floored > 0) {
            parts.warnings.push_back(std::to_string(kernel.floored) +
                                     " long-run variance path values floored");
        }
        if (sp.clipped_mass > 0.0) {
            parts.warnings.push_back("clipped negative eigenvalue mass " +
                                     format_compact(sp.clipped_mass));
        }
        double total = sp.total();
        if (!(total > 0.0)) {
            throw DegenerateInputError("empirical spectrum has no positive eigenvalues");
        }
        return sp;
    };

    switch (method) {
        case MethodId::SUCM:
            parts.statistic = cm_statistic(cusum_process(s)) / variance;
            parts.spectrum = classical_limit_spectrum(Functional::CM, classical_m);
            break;
        case MethodId::SCCM:
            parts.statistic = cm_statistic(cusum_process(s)) / hac_divisor();
            parts.spectrum = classical_limit_spectrum(Functional::CM, classical_m);
            break;
        case MethodId::SUAD:
            parts.statistic = ad_statistic(cusum_process(s)) / variance;
            parts.spectrum = classical_limit_spectrum(Functional::AD, classical_m);
            break;
        case MethodId::SCAD:
            parts.statistic = ad_statistic(cusum_process(s)) / hac_divisor();
            parts.spectrum = classical_limit_spectrum(Functional::AD, classical_m);
            break;
        case MethodId::HUCM:
            parts.statistic = cm_statistic(cusum_process(s));
            parts.spectrum = empirical_spectrum(empirical_kernel_uncorrelated(s, cfg.grid_size),
                                                SpectrumSource::EmpiricalUncorrelated);
            break;
        case MethodId::HUAD:
            parts.statistic = ad_statistic(cusum_process(s));
            parts.spectrum =
                empirical_spectrum(ad_weight_kernel(empirical_kernel_uncorrelated(s, cfg.grid_size)),
                                   SpectrumSource::EmpiricalUncorrelated);
            break;
        case MethodId::HCCM:
            parts.statistic = cm_statistic(cusum_process(s));
            parts.spectrum =
                empirical_spectrum(empirical_kernel_correlated(s, lrv_cfg, cfg.grid_size),
                                   SpectrumSource::EmpiricalCorrelated);
            break;
        case MethodId::HCAD:
            parts.statistic = ad_statistic(cusum_process(s));
            parts.spectrum = empirical_spectrum(
                ad_weight_kernel(empirical_kernel_correlated(s, lrv_cfg, cfg.grid_size)),
                SpectrumSource::EmpiricalCorrelated);
            break;
        case MethodId::VSU:
            parts.statistic = vs_statistic(s, variance);
            parts.spectrum = vs_limit_spectrum(classical_m);
            break;
        case MethodId::VSC:
            parts.statistic = vs_statistic(s, hac_divisor());
            parts.spectrum = vs_limit_spectrum(classical_m);
            break;
    }
    return parts;
}

TestReport finish_report(const Series& s, MethodId method, const ResolvedConfig& cfg,
                         StatisticParts parts, const LimitSample& sample) {
    (void)s;
    TestReport report;
    report.method = method;
    report.statistic = parts.statistic;
    report.spectrum_source = parts.spectrum.source;
    report.spectrum_terms = parts.spectrum.size();
    report.config = cfg;
    report.warnings = std::move(parts.warnings);
    report.p_value = p_value(sample, parts.statistic, cfg.pvalue_correction);
    for (std::size_t i = 0; i < kReportLevels.size(); ++i) {
        report.critical_values[i] = critical_value(sample, kReportLevels[i]);
    }
    return report;
}

}  // namespace detail

TestReport run_test(const Series& s, MethodId method, const TestConfig& cfg) {
    const ResolvedConfig resolved = resolve_config(cfg, s.size());
    auto parts = detail::compute_statistic_parts(s, method, resolved);
    const LimitSample sample = sample_weighted_chisq(parts.spectrum, resolved.replications,
                                                     parts.spectrum.dof, resolved.seed);
    return detail::finish_report(s, method, resolved, std::move(parts), sample);
}

}  // namespace hcpd
