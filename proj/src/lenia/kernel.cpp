// Copyright 2026 The leniaqd Authors.
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

#include "leniaqd/lenia/kernel.hpp"

#include <algorithm>
#include <string>

#include "leniaqd/lenia/fft.hpp"

namespace leniaqd::lenia {

DiscreteKernel build_kernel(const KernelSpec& spec, int space_resolution) {
    const double support = spec.relative_radius * space_resolution;
    if (!(support > 0.0)) throw ValidationError("build_kernel: non-positive support radius");
    const int extent = std::max(0, static_cast<int>(std::ceil(support)) - 1);
    const int edge = 2 * extent + 1;
    const int rings = static_cast<int>(spec.beta.size());

    DiscreteKernel k;
    k.edge = edge;
    k.taps.assign(static_cast<std::size_t>(edge) * edge, 0.0);

    double sum = 0.0;
    for (int dr = -extent; dr <= extent; ++dr) {
        for (int dc = -extent; dc <= extent; ++dc) {
            const double u = std::sqrt(double(dr) * dr + double(dc) * dc) / support;
            if (u >= 1.0) continue;
            const double scaled = u * rings;
            const int ring = static_cast<int>(scaled);  // scaled < rings since u < 1
            const double tap = spec.beta[ring] * kernel_core(scaled - ring);
            k.taps[static_cast<std::size_t>(dr + extent) * edge + (dc + extent)] = tap;
            sum += tap;
        }
    }
    if (!(sum > 0.0))
        throw ZeroKernelError("build_kernel: all taps zero (radius " +
                              std::to_string(spec.relative_radius) + ")");
    for (double& t : k.taps) t /= sum;
    return k;
}

std::vector<std::pair<int, int>> standard_wiring(int channels) {
    std::vector<std::pair<int, int>> wiring;
    wiring.reserve(standard_kernel_count(channels));
    for (int c = 0; c < channels; ++c)
        for (int i = 0; i < 3; ++i) wiring.emplace_back(c, c);
    for (int s = 0; s < channels; ++s)
        for (int t = 0; t < channels; ++t)
            if (s != t) wiring.emplace_back(s, t);
    return wiring;
}

void validate_kernel_specs(std::span<const KernelSpec> specs, const SimConfig& config) {
    auto fail = [](int k, const std::string& m) {
        throw ValidationError("kernel " + std::to_string(k) + ": " + m);
    };
    for (std::size_t k = 0; k < specs.size(); ++k) {
        const KernelSpec& s = specs[k];
        const int ki = static_cast<int>(k);
        if (!(s.relative_radius > 0.0 && s.relative_radius <= 1.0))
            fail(ki, "relative_radius must be in (0, 1]");
        if (s.beta.empty()) fail(ki, "beta must be non-empty");
        bool any_positive = false;
        for (double b : s.beta) {
            if (!(b >= 0.0 && b <= 1.0)) fail(ki, "beta values must be in [0, 1]");
            any_positive = any_positive || b > 0.0;
        }
        if (!any_positive) fail(ki, "beta must have a positive entry");
        if (!std::isfinite(s.mu)) fail(ki, "mu must be finite");
        if (!(s.sigma > 0.0)) fail(ki, "sigma must be positive");
        if (!(s.weight >= 0.0) || !std::isfinite(s.weight)) fail(ki, "weight must be >= 0");
        if (s.source < 0 || s.source >= config.channels) fail(ki, "source channel out of range");
        if (s.target < 0 || s.target >= config.channels) fail(ki, "target channel out of range");
        const double support = s.relative_radius * config.space_resolution;
        const int edge = 2 * std::max(0, static_cast<int>(std::ceil(support)) - 1) + 1;
        if (edge > std::min(config.world_height, config.world_width))
            fail(ki, "kernel support exceeds world size");
    }
}

KernelGeometry::KernelGeometry(std::span<const KernelSpec> specs, const SimConfig& config)
    : world_height_(config.world_height), world_width_(config.world_width) {
    kernels_.reserve(specs.size());
    spectra_.reserve(specs.size());
    SpectralGrid fft(world_height_, world_width_);
    for (const KernelSpec& s : specs) {
        kernels_.push_back(build_kernel(s, config.space_resolution));
        const DiscreteKernel& k = kernels_.back();
        spectra_.push_back(kernel_spectrum(k.taps, k.edge, fft));
    }
}

KernelBank KernelBank::build(std::vector<KernelSpec> specs, const SimConfig& config) {
    config.validate();
    validate_kernel_specs(specs, config);
    KernelBank bank;
    bank.channels = config.channels;
    bank.geometry = std::make_shared<KernelGeometry>(specs, config);
    bank.specs = std::move(specs);
    bank.target_weight_sum.assign(config.channels, 0.0);
    for (const KernelSpec& s : bank.specs) bank.target_weight_sum[s.target] += s.weight;
    return bank;
}

KernelBank KernelBank::with_growth_params(std::span<const float> params) const {
    if (params.size() != specs.size() * 3)
        throw ValidationError("with_growth_params: expected " + std::to_string(specs.size() * 3) +
                              " values, got " + std::to_string(params.size()));
    KernelBank bank;
    bank.channels = channels;
    bank.geometry = geometry;
    bank.specs = specs;
    bank.target_weight_sum.assign(channels, 0.0);
    for (std::size_t k = 0; k < bank.specs.size(); ++k) {
        KernelSpec& s = bank.specs[k];
        s.mu = params[3 * k + 0];
        s.sigma = params[3 * k + 1];
        s.weight = params[3 * k + 2];
        if (!(s.sigma > 0.0)) throw ValidationError("with_growth_params: sigma must be positive");
        if (!(s.weight >= 0.0)) throw ValidationError("with_growth_params: weight must be >= 0");
        bank.target_weight_sum[s.target] += s.weight;
    }
    return bank;
}

}  // namespace leniaqd::lenia
