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

#ifndef LENIAQD_LENIA_WORLD_HPP
#define LENIAQD_LENIA_WORLD_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "leniaqd/errors.hpp"
#include "leniaqd/lenia/config.hpp"

namespace leniaqd::lenia {

/// Toroidal lattice of float activations in [0, 1].
/// Storage is row-major [row][col][channel].
struct WorldState {
    int height = 0;
    int width = 0;
    int channels = 0;
    double time = 0.0;  // simulated time units elapsed
    std::vector<float> cells;

    WorldState() = default;
    WorldState(int height_, int width_, int channels_)
        : height(height_), width(width_), channels(channels_),
          cells(static_cast<std::size_t>(height_) * width_ * channels_, 0.0f) {}

    std::size_t index(int row, int col, int channel) const {
        return (static_cast<std::size_t>(row) * width + col) * channels + channel;
    }
    float& at(int row, int col, int channel) { return cells[index(row, col, channel)]; }
    float at(int row, int col, int channel) const { return cells[index(row, col, channel)]; }

    std::size_t site_count() const { return static_cast<std::size_t>(height) * width; }

    void validate() const {
        if (cells.size() != site_count() * static_cast<std::size_t>(channels))
            throw ValidationError("WorldState: cell buffer size mismatch");
        for (float v : cells)
            if (!(v >= 0.0f && v <= 1.0f))
                throw ValidationError("WorldState: cell value outside [0, 1]");
    }
};

/// Places a seed patch (row-major [row][col][channel], values in [0,1]) at the
/// center of a fresh world; the patch origin is offset by
/// floor((world_dim - seed_dim) / 2) along each axis. Time starts at zero.
inline WorldState embed_seed(std::span<const float> seed, const SimConfig& config) {
    config.validate();
    const int sh = config.seed_height, sw = config.seed_width;
    const std::size_t expected = static_cast<std::size_t>(sh) * sw * config.channels;
    if (seed.size() != expected)
        throw ValidationError("embed_seed: expected " + std::to_string(expected) +
                              " seed values, got " + std::to_string(seed.size()));
    for (float v : seed)
        if (!(v >= 0.0f && v <= 1.0f))
            throw ValidationError("embed_seed: seed value outside [0, 1]");

    WorldState world(config.world_height, config.world_width, config.channels);
    const int row_off = (config.world_height - sh) / 2;
    const int col_off = (config.world_width - sw) / 2;
    for (int r = 0; r < sh; ++r)
        for (int c = 0; c < sw; ++c)
            for (int ch = 0; ch < config.channels; ++ch)
                world.at(row_off + r, col_off + c, ch) =
                    seed[(static_cast<std::size_t>(r) * sw + c) * config.channels + ch];
    return world;
}

}  // namespace leniaqd::lenia

#endif  // LENIAQD_LENIA_WORLD_HPP
