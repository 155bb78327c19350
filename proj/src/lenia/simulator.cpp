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

#include "leniaqd/lenia/simulator.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cassert>

namespace leniaqd::lenia {

void step(WorldState& world, const KernelBank& bank, double dt, SimWorkspace& ws) {
    const int channels = world.channels;
    const std::size_t sites = world.site_count();
    assert(bank.geometry && bank.geometry->world_height() == world.height &&
           bank.geometry->world_width() == world.width);
    assert(bank.channels == channels);
    assert(ws.fft.height() == world.height && ws.fft.width() == world.width &&
           static_cast<int>(ws.growth_acc.size()) == channels);

    for (int c = 0; c < channels; ++c) {
        for (std::size_t i = 0; i < sites; ++i) ws.plane[i] = world.cells[i * channels + c];
        ws.fft.forward(ws.plane, ws.channel_spectra[c]);
        std::fill(ws.growth_acc[c].begin(), ws.growth_acc[c].end(), 0.0);
    }

    for (std::size_t k = 0; k < bank.specs.size(); ++k) {
        const KernelSpec& spec = bank.specs[k];
        const double norm = bank.target_weight_sum[spec.target];
        if (!(norm > 0.0) || spec.weight == 0.0) continue;
        multiply_spectra(ws.channel_spectra[spec.source],
                         bank.geometry->spectrum(static_cast<int>(k)), ws.scratch_spectrum);
        ws.fft.inverse(ws.scratch_spectrum, ws.field);

        const double scale = spec.weight / norm;
        Eigen::Map<Eigen::ArrayXd> u(ws.field.data(), static_cast<Eigen::Index>(sites));
        Eigen::Map<Eigen::ArrayXd> acc(ws.growth_acc[spec.target].data(),
                                       static_cast<Eigen::Index>(sites));
        const double inv_sigma = 1.0 / spec.sigma;
        acc += scale * (2.0 * (-0.5 * ((u - spec.mu) * inv_sigma).square()).exp() - 1.0);
    }

    for (int c = 0; c < channels; ++c) {
        const double* acc = ws.growth_acc[c].data();
        float* cells = world.cells.data() + c;
        for (std::size_t i = 0; i < sites; ++i) {
            const double v = static_cast<double>(cells[i * channels]) + dt * acc[i];
            cells[i * channels] = static_cast<float>(std::clamp(v, 0.0, 1.0));
        }
    }
    world.time += dt;
}

WorldState stepped(const WorldState& world, const KernelBank& bank, double dt) {
    WorldState out = world;
    SimWorkspace ws(world.height, world.width, world.channels);
    step(out, bank, dt, ws);
    return out;
}

}  // namespace leniaqd::lenia
