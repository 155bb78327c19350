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

#ifndef LENIAQD_LENIA_SIMULATOR_HPP
#define LENIAQD_LENIA_SIMULATOR_HPP

#include <complex>
#include <vector>

#include "leniaqd/lenia/fft.hpp"
#include "leniaqd/lenia/kernel.hpp"
#include "leniaqd/lenia/world.hpp"

namespace leniaqd::lenia {

/// Per-thread scratch for step(): one spectral engine plus reusable buffers.
/// Not shareable across threads.
struct SimWorkspace {
    SimWorkspace(int height, int width, int channels)
        : fft(height, width),
          channel_spectra(channels, std::vector<std::complex<double>>(fft.spectrum_size())),
          scratch_spectrum(fft.spectrum_size()),
          plane(static_cast<std::size_t>(height) * width),
          field(plane.size()),
          growth_acc(channels, std::vector<double>(plane.size())) {}

    SpectralGrid fft;
    std::vector<std::vector<std::complex<double>>> channel_spectra;
    std::vector<std::complex<double>> scratch_spectrum;
    std::vector<double> plane;
    std::vector<double> field;
    std::vector<std::vector<double>> growth_acc;
};

/// Advances the world by one step of length dt:
///   A_j <- clip(A_j + dt * sum_k (w_k / W_j) * growth(K_k * A_src(k)), 0, 1)
/// where * is toroidal convolution, w_k the kernel weight and W_j the summed
/// weight of kernels targeting channel j. A channel whose weight sum is zero
/// receives no update. Convolutions run in double precision via the spectral
/// route; cells stay float.
void step(WorldState& world, const KernelBank& bank, double dt, SimWorkspace& ws);

/// Allocating convenience wrapper around step().
WorldState stepped(const WorldState& world, const KernelBank& bank, double dt);

}  // namespace leniaqd::lenia

#endif  // LENIAQD_LENIA_SIMULATOR_HPP
