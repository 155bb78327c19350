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

#ifndef LENIAQD_QD_DESCRIPTOR_HPP
#define LENIAQD_QD_DESCRIPTOR_HPP

#include <Eigen/Core>

#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "leniaqd/errors.hpp"

namespace leniaqd::qd {

enum class DescriptorKind { Color, MassVelocity, AngleVelocity, Unsupervised };

const char* to_string(DescriptorKind kind);
DescriptorKind descriptor_kind_from_string(const std::string& name);

/// Descriptor-space geometry: dimension and per-dimension bounds.
/// Unsupervised descriptors have no fixed bounds; the repertoire tracks the
/// observed range instead.
struct DescriptorSpec {
    DescriptorKind kind = DescriptorKind::Color;
    Eigen::VectorXd lower, upper;

    int dimension() const { return static_cast<int>(lower.size()); }

    static DescriptorSpec color() {
        return {DescriptorKind::Color, Eigen::VectorXd::Zero(3), Eigen::VectorXd::Ones(3)};
    }
    /// (mean mass, mean speed) in resolution-independent units.
    static DescriptorSpec mass_velocity() {
        Eigen::VectorXd lo(2), hi(2);
        lo << 0.0, 0.0;
        hi << 16.0, 0.5;
        return {DescriptorKind::MassVelocity, lo, hi};
    }
    /// (circular-mean heading, mean speed).
    static DescriptorSpec angle_velocity() {
        Eigen::VectorXd lo(2), hi(2);
        lo << -std::numbers::pi, 0.0;
        hi << std::numbers::pi, 0.5;
        return {DescriptorKind::AngleVelocity, lo, hi};
    }
    static DescriptorSpec unsupervised(int latent_dim = 8) {
        const double inf = std::numeric_limits<double>::infinity();
        return {DescriptorKind::Unsupervised, Eigen::VectorXd::Constant(latent_dim, -inf),
                Eigen::VectorXd::Constant(latent_dim, inf)};
    }

    void validate() const {
        if (lower.size() != upper.size() || lower.size() == 0)
            throw ValidationError("DescriptorSpec: malformed bounds");
        for (int i = 0; i < dimension(); ++i)
            if (!(lower[i] < upper[i]))
                throw ValidationError("DescriptorSpec: lower bound must be below upper");
    }
};

/// Largest per-dimension resolution r with r^dim <= capacity, at least 1.
std::vector<int> resolution_for_capacity(int dim, long capacity);

/// Per-dimension bin of a descriptor: clamp into [lo, hi], then
/// floor((v-lo)/(hi-lo)*res), with v=hi mapping to the last bin.
std::vector<int> grid_cell(const Eigen::VectorXd& descriptor, const DescriptorSpec& spec,
                           std::span<const int> resolution);

/// Row-major flattening of grid_cell. Never errors: out-of-bounds
/// descriptors clamp to the boundary bins.
long grid_index(const Eigen::VectorXd& descriptor, const DescriptorSpec& spec,
                std::span<const int> resolution);

}  // namespace leniaqd::qd

#endif  // LENIAQD_QD_DESCRIPTOR_HPP
