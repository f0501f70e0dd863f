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

#include <json.hpp>

#include <cstdio>

#include "hcpd/methods.hpp"

namespace hcpd {

namespace {

const char* kernel_name(KernelId k) {
    switch (k) {
        case KernelId::Bartlett: return "bartlett";
        case KernelId::Parzen: return "parzen";
        case KernelId::Custom: return "custom";
    }
    return "?";
}

std::string level_key(double alpha) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%.2f", alpha);
    return buf;
}

}  // namespace

// Schema v1; field order is part of the output contract.
std::string report_to_json(const TestReport& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["method"] = method_name(r.method);
    j["statistic"] = r.statistic;
    j["p_value"] = r.p_value;
    nlohmann::ordered_json cvs;
    for (std::size_t i = 0; i < kReportLevels.size(); ++i) {
        cvs[level_key(kReportLevels[i])] = r.critical_values[i];
    }
    j["critical_values"] = cvs;
    j["spectrum_source"] = spectrum_source_name(r.spectrum_source);
    j["spectrum_terms"] = r.spectrum_terms;
    nlohmann::ordered_json cfg;
    cfg["grid_size"] = r.config.grid_size;
    cfg["num_terms"] = r.config.num_terms;
    cfg["bandwidth"] = r.config.bandwidth;
    cfg["kernel"] = kernel_name(r.config.kernel);
    cfg["replications"] = r.config.replications;
    cfg["seed"] = r.config.seed;
    cfg["pvalue_correction"] = r.config.pvalue_correction;
    j["config"] = cfg;
    j["warnings"] = r.warnings;
    return j.dump();
}

}  // namespace hcpd
