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

#include "leniaqd/lenia/rollout.hpp"

#include <cmath>
#include <limits>

namespace leniaqd::lenia {

namespace {
// First constraint violated by one post-development step, if any.
std::optional<measures::DiscardReason> check_step(const measures::StepStats& st, double spread,
                                                  const measures::GrowthConstraints& constraints) {
    if (st.degenerate) return measures::DiscardReason::Evaporated;
    const double mass = st.mass / constraints.mass_unit;
    if (mass < constraints.min_mass) return measures::DiscardReason::Evaporated;
    if (mass > constraints.max_mass) return measures::DiscardReason::Exploded;
    if (constraints.spread_check_enabled() && !std::isnan(spread) &&
        spread > constraints.max_spread)
        return measures::DiscardReason::TooSpread;
    return std::nullopt;
}
}  // namespace

RolloutResult rollout(const qd::Genotype& genotype, const qd::GenotypeLayout& layout,
                      const KernelBank& base_bank, const SimConfig& config,
                      const measures::GrowthConstraints& constraints,
                      const RetentionPolicy& retain, SimWorkspace* workspace) {
    config.validate();
    constraints.validate();
    if (retain.stride < 1) throw ValidationError("rollout: retention stride must be >= 1");
    if (config.steps <= constraints.discard_n)
        throw ValidationError("rollout: steps must exceed the development phase");
    if (static_cast<int>(genotype.genes.size()) != layout.total_genes())
        throw ValidationError("rollout: genotype length does not match layout");

    const KernelBank bank = base_bank.with_growth_params(genotype.rule_params(layout));
    WorldState world = embed_seed(genotype.seed(layout), config);

    std::optional<SimWorkspace> owned;
    if (!workspace) {
        owned.emplace(config.world_height, config.world_width, config.channels);
        workspace = &*owned;
    }

    const double dt = config.dt();
    const int n = constraints.discard_n;
    constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

    Trajectory traj;
    traj.config = config;
    traj.stats.discard_n = n;
    traj.stats.initial = measures::step_stats(world, nullptr, dt, 0);
    traj.stats.steps.reserve(config.steps);
    traj.stats.spread.reserve(config.steps);

    RolloutResult result;
    const measures::StepStats* previous = &traj.stats.initial;

    for (int s = 1; s <= config.steps; ++s) {
        step(world, bank, dt, *workspace);
        result.steps_run = s;
        traj.stats.steps.push_back(measures::step_stats(world, previous, dt, s));
        const measures::StepStats& st = traj.stats.steps.back();
        previous = &st;

        double spread = kNan;
        if (s > n && constraints.spread_check_enabled() && !st.degenerate)
            spread = measures::mass_spread(world, st.center);
        traj.stats.spread.push_back(spread);

        if (s > n) {
            if (auto reason = check_step(st, spread, constraints)) {
                result.discarded = reason;
                return result;
            }
            if ((s - n - 1) % retain.stride == 0) {
                traj.crops.push_back(measures::crop_phenotype(world, st.center, s));
                if (retain.keep_full_frames) traj.frames.emplace_back(s, world);
            }
        }
    }
    result.trajectory = std::move(traj);
    return result;
}

}  // namespace leniaqd::lenia
