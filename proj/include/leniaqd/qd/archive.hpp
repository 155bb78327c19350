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

#ifndef LENIAQD_QD_ARCHIVE_HPP
#define LENIAQD_QD_ARCHIVE_HPP

#include <Eigen/Core>

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "leniaqd/errors.hpp"
#include "leniaqd/measures/stats.hpp"
#include "leniaqd/qd/descriptor.hpp"
#include "leniaqd/qd/genotype.hpp"
#include "leniaqd/rng.hpp"

namespace leniaqd::qd {

struct EmptyArchiveError : Error {
    using Error::Error;
};
struct MissingCropsError : Error {
    using Error::Error;
};

/// The archive unit: an evaluated genotype.
struct Individual {
    Genotype genotype;
    double fitness = 0.0;
    Eigen::VectorXd descriptor;
    std::vector<measures::PhenotypeCrop> crops;
    measures::SummaryStats summary;
    int birth_generation = 0;
};

enum class AddOutcome { Added, Replaced, Rejected };

/// MAP-Elites: best individual per cell of a discretized descriptor grid.
/// Replacement requires strictly higher fitness, so per-cell fitness and
/// coverage are monotone over a run.
class MapElitesGrid {
public:
    MapElitesGrid(DescriptorSpec spec, std::vector<int> resolution);

    AddOutcome try_add(Individual ind);

    const DescriptorSpec& spec() const { return spec_; }
    std::span<const int> resolution() const { return resolution_; }
    long total_cells() const { return total_cells_; }
    std::size_t size() const { return filled_.size(); }
    const std::optional<Individual>& cell(long index) const { return cells_[index]; }
    /// Members in cell-filling order; index into this list is stable until a
    /// snapshot reload rebuilds it in cell order.
    const Individual& member(std::size_t i) const { return *cells_[filled_[i]]; }
    std::span<const long> filled_cells() const { return filled_; }

private:
    DescriptorSpec spec_;
    std::vector<int> resolution_;
    long total_cells_;
    std::vector<std::optional<Individual>> cells_;
    std::vector<long> filled_;
};

/// Distance-thresholded archive with local competition, for learned
/// descriptor spaces. A candidate whose nearest member lies at distance >=
/// the threshold is added; otherwise it competes on fitness with that
/// nearest member. Batches may overshoot the capacity; finalize_generation()
/// prunes back and recalibrates the threshold.
class UnstructuredRepertoire {
public:
    UnstructuredRepertoire(int descriptor_dim, long capacity);

    /// Sets the distance threshold from the given percentile (in [0,1]) of
    /// the pairwise distances among the given descriptors. Falls back to a
    /// tiny positive value when the batch has no positive distances.
    void bootstrap_threshold(std::span<const Eigen::VectorXd> descriptors,
                             double percentile = 0.1);

    AddOutcome try_add(Individual ind);

    /// Prunes overflow (removes the lower-fitness member of the closest
    /// descriptor pair until size == capacity; on equal fitness the later
    /// member goes) and, when pruning ran, resets the threshold to the
    /// minimum nearest-neighbor distance among survivors.
    void finalize_generation();

    /// Recomputes each member's descriptor (and optionally fitness) from its
    /// stored crops via `recompute`, rebuilds the index, prunes to capacity
    /// and recalibrates the threshold. Throws MissingCropsError if a member
    /// has no crops.
    void reencode(const std::function<void(Individual&)>& recompute);

    std::size_t size() const { return members_.size(); }
    long capacity() const { return capacity_; }
    int dimension() const { return dim_; }
    double distance_threshold() const { return threshold_; }
    void set_distance_threshold(double l);
    const Individual& member(std::size_t i) const { return members_[i]; }
    const std::vector<Individual>& members() const { return members_; }
    /// Observed per-dimension descriptor range over everything ever added.
    const Eigen::VectorXd& observed_lower() const { return observed_lower_; }
    const Eigen::VectorXd& observed_upper() const { return observed_upper_; }
    void set_observed_bounds(Eigen::VectorXd lower, Eigen::VectorXd upper);

    /// Index and distance of the member nearest to `d`; ties resolve to the
    /// lowest index. Throws EmptyArchiveError when empty.
    std::pair<std::size_t, double> nearest(const Eigen::VectorXd& d) const;

    /// Reinstates a member list verbatim (snapshot load).
    void restore_members(std::vector<Individual> members);

private:
    void observe(const Eigen::VectorXd& d);
    void prune_to_capacity();
    double min_nearest_neighbor_distance() const;

    int dim_;
    long capacity_;
    double threshold_ = 0.0;
    std::vector<Individual> members_;
    Eigen::VectorXd observed_lower_, observed_upper_;
};

/// `count` independent uniform draws (with replacement) over current members.
std::vector<const Individual*> select_uniform(const MapElitesGrid& grid, int count,
                                              PhiloxRng& rng);
std::vector<const Individual*> select_uniform(const UnstructuredRepertoire& rep, int count,
                                              PhiloxRng& rng);

}  // namespace leniaqd::qd

#endif  // LENIAQD_QD_ARCHIVE_HPP
