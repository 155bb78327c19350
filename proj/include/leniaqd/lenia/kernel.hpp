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

#ifndef LENIAQD_LENIA_KERNEL_HPP
#define LENIAQD_LENIA_KERNEL_HPP

#include <cmath>
#include <complex>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "leniaqd/errors.hpp"
#include "leniaqd/lenia/config.hpp"

namespace leniaqd::lenia {

/// The kernel shape produced degenerate (all-zero) weights.
struct ZeroKernelError : Error {
    using Error::Error;
};

/// Bell-shaped radial profile on (0, 1): exp(4 - 1/(r(1-r))), peak 1 at r=1/2,
/// zero at and outside the ends.
inline double kernel_core(double r) {
    if (r <= 0.0 || r >= 1.0) return 0.0;
    return std::exp(4.0 - 1.0 / (r * (1.0 - r)));
}

/// Gaussian bump growth mapping in [-1, 1]: 2 exp(-(u-mu)^2 / (2 sigma^2)) - 1.
inline double growth_value(double u, double mu, double sigma) {
    const double d = (u - mu) / sigma;
    return 2.0 * std::exp(-0.5 * d * d) - 1.0;
}

/// One convolution kernel: ring geometry plus growth-mapping parameters and
/// channel wiring. `weight` is the kernel's relative height in the update mix.
struct KernelSpec {
    double relative_radius = 0.5;     // support radius as a fraction of space_resolution
    std::vector<double> beta = {1.0}; // per-ring peak heights, values in [0, 1]
    double mu = 0.2;                  // growth center
    double sigma = 0.03;              // growth width
    double weight = 1.0;              // relative height in the target-channel mix
    int source = 0;
    int target = 0;
};

/// A discrete kernel: odd square array of non-negative taps summing to 1,
/// center tap at (extent, extent), row-major.
struct DiscreteKernel {
    int edge = 0;  // 2*extent + 1
    std::vector<double> taps;
    int extent() const { return edge / 2; }
    double at(int dr, int dc) const {
        return taps[static_cast<std::size_t>(dr + extent()) * edge + (dc + extent())];
    }
};

/// Samples the ring profile of `spec` on the lattice and normalizes the taps
/// to unit sum. A site at distance d contributes beta[floor(B*u)] *
/// kernel_core(frac(B*u)) with u = d / (relative_radius * space_resolution)
/// and B the ring count; sites with u >= 1 are outside the support.
/// Throws ZeroKernelError if every tap is zero.
DiscreteKernel build_kernel(const KernelSpec& spec, int space_resolution);

/// Canonical kernel wiring for `channels` fully connected channels: three
/// self-kernels per channel (channel-major), then one kernel per ordered
/// distinct (source, target) pair in lexicographic order.
std::vector<std::pair<int, int>> standard_wiring(int channels);

/// Kernel count implied by standard_wiring.
inline int standard_kernel_count(int channels) { return 3 * channels + channels * (channels - 1); }

/// Discrete kernels and their world-sized spectra. Geometry depends only on
/// ring shape and lattice size, so one instance is shared across every
/// genotype of a run (growth parameters never touch it).
class KernelGeometry {
public:
    KernelGeometry(std::span<const KernelSpec> specs, const SimConfig& config);

    int kernel_count() const { return static_cast<int>(kernels_.size()); }
    int world_height() const { return world_height_; }
    int world_width() const { return world_width_; }
    const DiscreteKernel& kernel(int k) const { return kernels_[k]; }
    const std::vector<std::complex<double>>& spectrum(int k) const { return spectra_[k]; }

private:
    int world_height_, world_width_;
    std::vector<DiscreteKernel> kernels_;
    std::vector<std::vector<std::complex<double>>> spectra_;
};

/// Kernel specs bound to a shared geometry, plus the per-target-channel
/// weight normalizers used by the update rule.
struct KernelBank {
    std::vector<KernelSpec> specs;
    std::shared_ptr<const KernelGeometry> geometry;
    std::vector<double> target_weight_sum;  // per channel; 0 means channel receives nothing
    int channels = 0;

    /// Validates specs against config and computes geometry and spectra.
    static KernelBank build(std::vector<KernelSpec> specs, const SimConfig& config);

    /// Same geometry, new growth parameters. `params` holds kernel-major
    /// (mu, sigma, weight) triples, one per kernel.
    KernelBank with_growth_params(std::span<const float> params) const;
};

/// Checks spec values and channel wiring ranges; throws ValidationError.
void validate_kernel_specs(std::span<const KernelSpec> specs, const SimConfig& config);

}  // namespace leniaqd::lenia

#endif  // LENIAQD_LENIA_KERNEL_HPP
