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

#ifndef LENIAQD_LENIA_CONFIG_HPP
#define LENIAQD_LENIA_CONFIG_HPP

#include <string>

#include "leniaqd/errors.hpp"

namespace leniaqd::lenia {

/// Geometry and integration settings for one simulation.
struct SimConfig {
    int space_resolution = 12;  // kernel radius unit R, in lattice sites
    int time_resolution = 2;    // steps per unit time T; dt = 1/T
    int world_height = 128;
    int world_width = 128;
    int channels = 3;
    int steps = 200;            // rollout length N
    int seed_height = 32;       // seed patch dimensions
    int seed_width = 32;

    double dt() const { return 1.0 / static_cast<double>(time_resolution); }

    void validate() const {
        auto fail = [](const std::string& m) { throw ValidationError("SimConfig: " + m); };
        if (space_resolution < 1) fail("space_resolution must be >= 1");
        if (time_resolution < 1) fail("time_resolution must be >= 1");
        if (world_height < 2 || world_width < 2) fail("world dimensions must be >= 2");
        if (channels < 1) fail("channels must be >= 1");
        if (steps < 1) fail("steps must be >= 1");
        if (seed_height < 1 || seed_height > world_height)
            fail("seed_height must be in [1, world_height]");
        if (seed_width < 1 || seed_width > world_width)
            fail("seed_width must be in [1, world_width]");
    }
};

}  // namespace leniaqd::lenia

#endif  // LENIAQD_LENIA_CONFIG_HPP
