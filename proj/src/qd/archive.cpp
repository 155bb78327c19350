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

#include "leniaqd/qd/archive.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace leniaqd::qd {

MapElitesGrid::MapElitesGrid(DescriptorSpec spec, std::vector<int> resolution)
    : spec_(std::move(spec)), resolution_(std::move(resolution)) {
    spec_.validate();
    if (resolution_.size() != static_cast<std::size_t>(spec_.dimension()))
        throw ValidationError("MapElitesGrid: resolution dimension mismatch");
    total_cells_ = 1;
    for (int r : resolution_) {
        if (r < 1) throw ValidationError("MapElitesGrid: resolution must be >= 1");
        total_cells_ *= r;
    }
    cells_.resize(total_cells_);
}

AddOutcome MapElitesGrid::try_add(Individual ind) {
    if (ind.descriptor.size() != spec_.dimension())
        throw ValidationError("MapElitesGrid: descriptor dimension mismatch");
    const long idx = grid_index(ind.descriptor, spec_, resolution_);
    std::optional<Individual>& cell = cells_[idx];
    if (!cell) {
        cell = std::move(ind);
        filled_.push_back(idx);
        return AddOutcome::Added;
    }
    if (ind.fitness > cell->fitness) {
        cell = std::move(ind);
        return AddOutcome::Replaced;
    }
    return AddOutcome::Rejected;
}

UnstructuredRepertoire::UnstructuredRepertoire(int descriptor_dim, long capacity)
    : dim_(descriptor_dim), capacity_(capacity) {
    if (dim_ < 1) throw ValidationError("UnstructuredRepertoire: dimension must be >= 1");
    if (capacity_ < 1) throw ValidationError("UnstructuredRepertoire: capacity must be >= 1");
    observed_lower_ = Eigen::VectorXd::Constant(dim_, std::numeric_limits<double>::infinity());
    observed_upper_ = Eigen::VectorXd::Constant(dim_, -std::numeric_limits<double>::infinity());
}

void UnstructuredRepertoire::observe(const Eigen::VectorXd& d) {
    observed_lower_ = observed_lower_.cwiseMin(d);
    observed_upper_ = observed_upper_.cwiseMax(d);
}

void UnstructuredRepertoire::set_observed_bounds(Eigen::VectorXd lower, Eigen::VectorXd upper) {
    if (lower.size() != dim_ || upper.size() != dim_)
        throw ValidationError("UnstructuredRepertoire: observed-bound dimension mismatch");
    observed_lower_ = std::move(lower);
    observed_upper_ = std::move(upper);
}

void UnstructuredRepertoire::set_distance_threshold(double l) {
    if (!(l >= 0.0) || !std::isfinite(l))
        throw ValidationError("UnstructuredRepertoire: threshold must be finite and >= 0");
    threshold_ = l;
}

void UnstructuredRepertoire::bootstrap_threshold(std::span<const Eigen::VectorXd> descriptors,
                                                 double percentile) {
    std::vector<double> distances;
    distances.reserve(descriptors.size() * (descriptors.size() + 1) / 2);
    for (std::size_t i = 0; i < descriptors.size(); ++i)
        for (std::size_t j = i + 1; j < descriptors.size(); ++j)
            distances.push_back((descriptors[i] - descriptors[j]).norm());
    double l = 0.0;
    if (!distances.empty()) {
        std::sort(distances.begin(), distances.end());
        const auto rank = static_cast<std::size_t>(percentile * (distances.size() - 1));
        l = distances[rank];
    }
    if (!(l > 0.0)) {
        // Degenerate batch (all-identical descriptors): fall back to the
        // smallest positive distance, or a tiny floor so duplicates compete
        // instead of piling up.
        l = 1e-9;
        for (double d : distances)
            if (d > 0.0) {
                l = d;
                break;
            }
    }
    threshold_ = l;
}

std::pair<std::size_t, double> UnstructuredRepertoire::nearest(const Eigen::VectorXd& d) const {
    if (members_.empty()) throw EmptyArchiveError("UnstructuredRepertoire: empty");
    std::size_t best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < members_.size(); ++i) {
        const double dist = (members_[i].descriptor - d).norm();
        if (dist < best_dist) {
            best_dist = dist;
            best = i;
        }
    }
    return {best, best_dist};
}

AddOutcome UnstructuredRepertoire::try_add(Individual ind) {
    if (ind.descriptor.size() != dim_)
        throw ValidationError("UnstructuredRepertoire: descriptor dimension mismatch");
    observe(ind.descriptor);
    if (members_.empty()) {
        members_.push_back(std::move(ind));
        return AddOutcome::Added;
    }
    const auto [idx, dist] = nearest(ind.descriptor);
    if (dist >= threshold_) {
        members_.push_back(std::move(ind));
        return AddOutcome::Added;
    }
    if (ind.fitness > members_[idx].fitness) {
        members_[idx] = std::move(ind);
        return AddOutcome::Replaced;
    }
    return AddOutcome::Rejected;
}

double UnstructuredRepertoire::min_nearest_neighbor_distance() const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < members_.size(); ++i)
        for (std::size_t j = i + 1; j < members_.size(); ++j)
            best = std::min(best, (members_[i].descriptor - members_[j].descriptor).norm());
    return best;
}

void UnstructuredRepertoire::prune_to_capacity() {
    while (members_.size() > static_cast<std::size_t>(capacity_)) {
        // Closest pair; drop its lower-fitness member (later index on ties).
        std::size_t pa = 0, pb = 1;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < members_.size(); ++i) {
            for (std::size_t j = i + 1; j < members_.size(); ++j) {
                const double d = (members_[i].descriptor - members_[j].descriptor).norm();
                if (d < best) {
                    best = d;
                    pa = i;
                    pb = j;
                }
            }
        }
        const std::size_t victim = members_[pa].fitness < members_[pb].fitness ? pa : pb;
        members_.erase(members_.begin() + static_cast<std::ptrdiff_t>(victim));
    }
}

void UnstructuredRepertoire::finalize_generation() {
    if (members_.size() <= static_cast<std::size_t>(capacity_)) return;
    prune_to_capacity();
    if (members_.size() >= 2) {
        const double l = min_nearest_neighbor_distance();
        if (l > 0.0 && std::isfinite(l)) threshold_ = l;
    }
}

void UnstructuredRepertoire::reencode(const std::function<void(Individual&)>& recompute) {
    for (Individual& m : members_) {
        if (m.crops.empty())
            throw MissingCropsError("reencode: member without stored crops");
        recompute(m);
        if (m.descriptor.size() != dim_)
            throw ValidationError("reencode: recomputed descriptor dimension mismatch");
        observe(m.descriptor);
    }
    prune_to_capacity();
    if (members_.size() >= 2) {
        const double l = min_nearest_neighbor_distance();
        if (l > 0.0 && std::isfinite(l)) threshold_ = l;
    }
}

void UnstructuredRepertoire::restore_members(std::vector<Individual> members) {
    for (const Individual& m : members)
        if (m.descriptor.size() != dim_)
            throw ValidationError("restore_members: descriptor dimension mismatch");
    members_ = std::move(members);
}

std::vector<const Individual*> select_uniform(const MapElitesGrid& grid, int count,
                                              PhiloxRng& rng) {
    if (grid.size() == 0) throw EmptyArchiveError("select_uniform: empty grid");
    std::vector<const Individual*> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i)
        out.push_back(&grid.member(rng.below(static_cast<uint64_t>(grid.size()))));
    return out;
}

std::vector<const Individual*> select_uniform(const UnstructuredRepertoire& rep, int count,
                                              PhiloxRng& rng) {
    if (rep.size() == 0) throw EmptyArchiveError("select_uniform: empty repertoire");
    std::vector<const Individual*> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i)
        out.push_back(&rep.member(rng.below(static_cast<uint64_t>(rep.size()))));
    return out;
}

}  // namespace leniaqd::qd
