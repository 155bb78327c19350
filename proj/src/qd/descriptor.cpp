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

#include "leniaqd/qd/descriptor.hpp"

#include <algorithm>

namespace leniaqd::qd {

const char* to_string(DescriptorKind kind) {
    switch (kind) {
        case DescriptorKind::Color: return "color";
        case DescriptorKind::MassVelocity: return "mass_velocity";
        case DescriptorKind::AngleVelocity: return "angle_velocity";
        case DescriptorKind::Unsupervised: return "unsupervised";
    }
    return "unknown";
}

DescriptorKind descriptor_kind_from_string(const std::string& name) {
    if (name == "color") return DescriptorKind::Color;
    if (name == "mass_velocity") return DescriptorKind::MassVelocity;
    if (name == "angle_velocity") return DescriptorKind::AngleVelocity;
    if (name == "unsupervised") return DescriptorKind::Unsupervised;
    throw ValidationError("unknown descriptor kind: " + name);
}

std::vector<int> resolution_for_capacity(int dim, long capacity) {
    if (dim < 1) throw ValidationError("resolution_for_capacity: dim must be >= 1");
    if (capacity < 1) throw ValidationError("resolution_for_capacity: capacity must be >= 1");
    int r = 1;
    for (;;) {
        long cells = 1;
        bool fits = true;
        for (int d = 0; d < dim; ++d) {
            if (cells > capacity / (r + 1)) {
                fits = false;
                break;
            }
            cells *= (r + 1);
        }
        if (!fits || cells > capacity) break;
        ++r;
    }
    return std::vector<int>(dim, r);
}

std::vector<int> grid_cell(const Eigen::VectorXd& descriptor, const DescriptorSpec& spec,
                           std::span<const int> resolution) {
    spec.validate();
    if (descriptor.size() != spec.dimension() ||
        resolution.size() != static_cast<std::size_t>(spec.dimension()))
        throw ValidationError("grid_cell: dimension mismatch");
    std::vector<int> cell(spec.dimension());
    for (int d = 0; d < spec.dimension(); ++d) {
        const double lo = spec.lower[d], hi = spec.upper[d];
        if (!std::isfinite(lo) || !std::isfinite(hi))
            throw ValidationError("grid_cell: descriptor space has no fixed bounds");
        const double v = std::clamp(descriptor[d], lo, hi);
        int bin = static_cast<int>(std::floor((v - lo) / (hi - lo) * resolution[d]));
        bin = std::clamp(bin, 0, resolution[d] - 1);  // v == hi lands in the last bin
        cell[d] = bin;
    }
    return cell;
}

long grid_index(const Eigen::VectorXd& descriptor, const DescriptorSpec& spec,
                std::span<const int> resolution) {
    const std::vector<int> cell = grid_cell(descriptor, spec, resolution);
    long index = 0;
    for (std::size_t d = 0; d < cell.size(); ++d) index = index * resolution[d] + cell[d];
    return index;
}

}  // namespace leniaqd::qd
