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

#ifndef LENIAQD_LENIA_ROLLOUT_HPP
#define LENIAQD_LENIA_ROLLOUT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "leniaqd/lenia/simulator.hpp"
#include "leniaqd/measures/stats.hpp"
#include "leniaqd/qd/genotype.hpp"

namespace leniaqd::lenia {

/// What a rollout keeps: phenotype crops at every `stride`-th step after the
/// development phase, and optionally the full worlds at the same steps (for
/// frame export; stride 1 keeps every post-development frame).
struct RetentionPolicy {
    int stride = 8;
    bool keep_full_frames = false;
};

/// The developmental record of one simulated genotype.
struct Trajectory {
    SimConfig config;
    measures::StatsSeries stats;                       // steps 0..N
    std::vector<measures::PhenotypeCrop> crops;        // strided, steps > discard_n
    std::vector<std::pair<int, WorldState>> frames;    // only when keep_full_frames
};

/// Discarded{reason} and Kept{trajectory} as a plain value: constraint
/// violations are expected outcomes, not faults.
struct RolloutResult {
    std::optional<Trajectory> trajectory;              // engaged iff kept
    std::optional<measures::DiscardReason> discarded;  // engaged iff discarded
    int steps_run = 0;

    bool kept() const { return trajectory.has_value(); }
};

/// Simulates genotype for config.steps steps from its embedded seed, under
/// the kernel geometry of `base_bank` rebound to the genotype's rule genes.
/// Computes per-step measures, applies the growth constraints incrementally
/// on steps > discard_n (stopping at the first violation), and retains crops
/// per the policy. The workspace must match the world shape; pass nullptr to
/// allocate one internally.
RolloutResult rollout(const qd::Genotype& genotype, const qd::GenotypeLayout& layout,
                      const KernelBank& base_bank, const SimConfig& config,
                      const measures::GrowthConstraints& constraints,
                      const RetentionPolicy& retain, SimWorkspace* workspace = nullptr);

}  // namespace leniaqd::lenia

#endif  // LENIAQD_LENIA_ROLLOUT_HPP
