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

#include "hcpd/dgp.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "hcpd/errors.hpp"
#include "hcpd/parallel.hpp"
#include "hcpd/rng.hpp"

namespace hcpd {

namespace {

// Seed namespaces so the generator, the centering pre-run, and the Monte
// Carlo calibration never share a stream.
constexpr std::uint64_t kCenteringSeed = 0x9C3A17F0571ULL;
constexpr std::uint64_t kSharedSampleIndex = 0xFACADE;

struct GarchMoments {
    double abs_mean = 0.0;
    double sq_mean = 0.0;
};

// E|R| and E R^2 estimated once per parameter triple from a long pre-run.
GarchMoments garch_moments(double omega, double alpha, double beta) {
    static std::map<std::tuple<double, double, double>, GarchMoments> cache;
    static std::mutex mutex;
    const auto key = std::make_tuple(omega, alpha, beta);
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }

    constexpr std::size_t kPreRun = 1'000'000;
    RngStream rng(kCenteringSeed);
    double sigma2 = omega / (1.0 - alpha - beta);
    double r = 0.0;
    for (std::size_t i = 0; i < kBurnIn; ++i) {
        sigma2 = omega + alpha * r * r + beta * sigma2;
        r = std::sqrt(sigma2) * rng.normal();
    }
    double abs_sum = 0.0, sq_sum = 0.0;
    for (std::size_t i = 0; i < kPreRun; ++i) {
        sigma2 = omega + alpha * r * r + beta * sigma2;
        r = std::sqrt(sigma2) * rng.normal();
        abs_sum += std::abs(r);
        sq_sum += r * r;
    }
    GarchMoments m{abs_sum / kPreRun, sq_sum / kPreRun};
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(key, m);
    return m;
}

std::string base_label(const DgpSpec& s) {
    std::ostringstream os;
    switch (s.base) {
        case DgpBase::GaussianIid: os << "gauss"; break;
        case DgpBase::Ar1: os << "ar1:" << s.rho; break;
        case DgpBase::Garch: os << "garch:" << s.omega << ":" << s.alpha << ":" << s.beta; break;
        case DgpBase::GarchAbs:
            os << "garch_abs:" << s.omega << ":" << s.alpha << ":" << s.beta;
            break;
        case DgpBase::GarchSq:
            os << "garch_sq:" << s.omega << ":" << s.alpha << ":" << s.beta;
            break;
    }
    return os.str();
}

}  // namespace

double scale_profile_at(ScaleProfile p, std::size_t i, std::size_t n) {
    const double di = static_cast<double>(i);
    const double dn = static_cast<double>(n);
    switch (p) {
        case ScaleProfile::None: return 1.0;
        case ScaleProfile::A1: return di / (2.0 * dn);
        case ScaleProfile::A2: return di <= 0.5 * dn ? 0.25 : 0.5;
        case ScaleProfile::A3: return di > 0.5 * dn ? 4.0 : 1.0;
        case ScaleProfile::A4: return di > 0.5 * dn ? 0.25 : 1.0;
        case ScaleProfile::Sin: return std::sin(3.14159265358979323846 * di / dn);
    }
    return 1.0;
}

void DgpSpec::validate() const {
    if (n < Series::kMinLength) throw std::invalid_argument("DGP length too small");
    if (base == DgpBase::Ar1 && !(std::abs(rho) < 1.0)) {
        throw std::invalid_argument("AR(1) needs |rho| < 1");
    }
    if (base == DgpBase::Garch || base == DgpBase::GarchAbs || base == DgpBase::GarchSq) {
        if (!(omega > 0.0) || alpha < 0.0 || beta < 0.0 || !(alpha + beta < 1.0)) {
            throw std::invalid_argument(
                "GARCH needs omega > 0, alpha, beta >= 0 and alpha + beta < 1");
        }
    }
}

std::string DgpSpec::label() const {
    std::ostringstream os;
    os << base_label(*this) << "|";
    switch (profile) {
        case ScaleProfile::None: os << "none"; break;
        case ScaleProfile::A1: os << "a1"; break;
        case ScaleProfile::A2: os << "a2"; break;
        case ScaleProfile::A3: os << "a3"; break;
        case ScaleProfile::A4: os << "a4"; break;
        case ScaleProfile::Sin: os << "sin"; break;
    }
    os << "|" << (mean.is_constant() ? "none" : "shift");
    return os.str();
}

Series gen_garch(std::size_t n, double omega, double alpha, double beta, std::uint64_t seed) {
    if (!(omega > 0.0) || alpha < 0.0 || beta < 0.0 || !(alpha + beta < 1.0)) {
        throw std::invalid_argument("GARCH needs omega > 0, alpha, beta >= 0 and alpha + beta < 1");
    }
    RngStream rng(seed);
    std::vector<double> out(n);
    double sigma2 = omega / (1.0 - alpha - beta);  // stationary start
    double r = 0.0;
    for (std::size_t i = 0; i < kBurnIn; ++i) {
        sigma2 = omega + alpha * r * r + beta * sigma2;
        r = std::sqrt(sigma2) * rng.normal();
    }
    for (std::size_t i = 0; i < n; ++i) {
        sigma2 = omega + alpha * r * r + beta * sigma2;
        r = std::sqrt(sigma2) * rng.normal();
        out[i] = r;
    }
    return Series(std::move(out));
}

Series gen_ar1(std::size_t n, double rho, std::uint64_t seed) {
    if (!(std::abs(rho) < 1.0)) throw std::invalid_argument("AR(1) needs |rho| < 1");
    RngStream rng(seed);
    std::vector<double> out(n);
    double y = rng.normal() / std::sqrt(1.0 - rho * rho);  // stationary start
    for (std::size_t i = 0; i < kBurnIn; ++i) y = rho * y + rng.normal();
    for (std::size_t i = 0; i < n; ++i) {
        y = rho * y + rng.normal();
        out[i] = y;
    }
    return Series(std::move(out));
}

Series gen_gaussian(std::size_t n, std::uint64_t seed) {
    RngStream rng(seed);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = rng.normal();
    return Series(std::move(out));
}

Series apply_profile(const Series& base, const DgpSpec& spec) {
    spec.validate();
    const std::size_t n = base.size();

    double center = 0.0;
    if (spec.base == DgpBase::GarchAbs || spec.base == DgpBase::GarchSq) {
        const GarchMoments m = garch_moments(spec.omega, spec.alpha, spec.beta);
        center = spec.base == DgpBase::GarchAbs ? m.abs_mean : m.sq_mean;
    }

    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        double e = base[i];
        if (spec.base == DgpBase::GarchAbs) e = std::abs(e) - center;
        if (spec.base == DgpBase::GarchSq) e = e * e - center;
        out[i] = spec.mean.mean_at(i + 1, n) + scale_profile_at(spec.profile, i + 1, n) * e;
    }
    return Series(std::move(out));
}

Series make_series(const DgpSpec& spec, std::uint64_t seed) {
    spec.validate();
    switch (spec.base) {
        case DgpBase::GaussianIid:
            return apply_profile(gen_gaussian(spec.n, seed), spec);
        case DgpBase::Ar1:
            return apply_profile(gen_ar1(spec.n, spec.rho, seed), spec);
        case DgpBase::Garch:
        case DgpBase::GarchAbs:
        case DgpBase::GarchSq:
            return apply_profile(gen_garch(spec.n, spec.omega, spec.alpha, spec.beta, seed), spec);
    }
    throw std::invalid_argument("unknown DGP base");
}

RejectionResult rejection_rate(const DgpSpec& spec, MethodId method, const TestConfig& cfg,
                               double level, std::size_t reps, std::uint64_t seed) {
    spec.validate();
    if (reps < 100) throw std::invalid_argument("rejection rate needs at least 100 replications");
    if (!(level > 0.0 && level < 1.0)) throw std::invalid_argument("level must lie in (0, 1)");

    const ResolvedConfig resolved = resolve_config(cfg, spec.n);

    // The S- and VS-method limit laws do not depend on the data, so one
    // well-resolved sample calibrates every replication.
    LimitSample shared;
    const bool fixed = detail::has_fixed_spectrum(method);
    if (fixed) {
        const Spectrum sp = detail::fixed_spectrum(method, resolved.num_terms);
        const std::size_t shared_reps = std::max<std::size_t>(resolved.replications, 100'000);
        shared = sample_weighted_chisq(sp, shared_reps, sp.dof, mix_seed(seed, kSharedSampleIndex));
    }

    enum class Outcome : unsigned char { Accept, Reject, Degenerate };
    std::vector<Outcome> outcomes(reps, Outcome::Accept);

    parallel_for(reps, [&](std::size_t r) {
        const std::uint64_t dgp_seed = mix_seed(seed, 2 * r);
        const std::uint64_t mc_seed = mix_seed(seed, 2 * r + 1);
        try {
            const Series x = make_series(spec, dgp_seed);
            double p;
            if (fixed) {
                auto parts = detail::compute_statistic_parts(x, method, resolved);
                p = p_value(shared, parts.statistic, resolved.pvalue_correction);
            } else {
                ResolvedConfig rep_cfg = resolved;
                rep_cfg.seed = mc_seed;
                auto parts = detail::compute_statistic_parts(x, method, rep_cfg);
                const LimitSample sample = sample_weighted_chisq(
                    parts.spectrum, rep_cfg.replications, parts.spectrum.dof, mc_seed);
                p = p_value(sample, parts.statistic, rep_cfg.pvalue_correction);
            }
            outcomes[r] = p < level ? Outcome::Reject : Outcome::Accept;
        } catch (const DegenerateInputError&) {
            outcomes[r] = Outcome::Degenerate;
        }
    });

    RejectionResult result;
    std::size_t rejects = 0;
    for (Outcome o : outcomes) {
        if (o == Outcome::Degenerate) {
            ++result.degenerate;
        } else {
            ++result.replications;
            rejects += o == Outcome::Reject ? 1 : 0;
        }
    }
    if (result.replications == 0) {
        throw DegenerateInputError("every replication was degenerate");
    }
    result.rate = static_cast<double>(rejects) / static_cast<double>(result.replications);
    result.mc_stderr = std::sqrt(result.rate * (1.0 - result.rate) /
                                 static_cast<double>(result.replications));
    return result;
}

}  // namespace hcpd
