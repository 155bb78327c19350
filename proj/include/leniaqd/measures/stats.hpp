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

#ifndef LENIAQD_MEASURES_STATS_HPP
#define LENIAQD_MEASURES_STATS_HPP

#include <Eigen/Core>

#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "leniaqd/errors.hpp"
#include "leniaqd/lenia/world.hpp"

namespace leniaqd::measures {

struct ZeroMassError : Error {
    using Error::Error;
};
struct SeriesTooShortError : Error {
    using Error::Error;
};

/// Minimal signed displacement from `from` to `to` on a circle of the given
/// length: the representative of (to - from) in [-length/2, length/2).
double toroidal_delta(double from, double to, double length);

/// Minimal signed angle difference in (-pi, pi].
double angle_delta(double from, double to);

/// Per-step statistical measures of a world.
/// Vector quantities are (x, y) with x = column index and y = row index, so a
/// heading along +x has angle 0 and +y (down rows) has angle +pi/2.
struct StepStats {
    int step = 0;                          // simulation step index; 0 = initial state
    double mass = 0.0;                     // raw activation sum over sites and channels
    Eigen::Vector2d center{0.0, 0.0};      // toroidal center of mass, site units
    Eigen::Vector2d velocity{0.0, 0.0};    // sites per time unit
    double speed = 0.0;                    // |velocity|
    double angle = 0.0;                    // atan2(vy, vx); 0 when speed is 0
    double angular_velocity = 0.0;         // wrapped heading change per time unit
    std::vector<double> color;             // per-channel mean activation, in [0, 1]
    bool degenerate = false;               // zero total mass; center is (0,0) by convention
};

/// Toroidal center of mass via the per-axis circular mean of channel-summed
/// site weights. An axis whose resultant vanishes (full symmetry) maps to
/// coordinate 0 by convention. Throws ZeroMassError on an empty world.
Eigen::Vector2d center_of_mass_toroidal(const lenia::WorldState& world);

/// Mass-weighted RMS toroidal distance from `center`, site units.
/// Throws ZeroMassError on an empty world.
double mass_spread(const lenia::WorldState& world, const Eigen::Vector2d& center);

/// Computes one step's measures. Velocity derives from the minimal toroidal
/// displacement of the center since `previous`; angular velocity from the
/// minimal signed heading change. Without a previous step (or when either
/// step is degenerate, or either speed is zero for the heading change) the
/// derived quantities are 0 by convention. Zero mass never throws here: the
/// result carries a degenerate marker instead.
StepStats step_stats(const lenia::WorldState& world, const StepStats* previous, double dt,
                     int step_index);

/// A 32x32 window cut around a rounded center with toroidal wrap.
struct PhenotypeCrop {
    static constexpr int kEdge = 32;
    int channels = 0;
    int source_step = 0;
    std::vector<float> pixels;  // row-major [row][col][channel]
};

/// Cuts the crop whose geometric center is the rounded center of mass.
PhenotypeCrop crop_phenotype(const lenia::WorldState& world, const Eigen::Vector2d& center,
                             int step_index);

/// Measures for steps 1..N plus the initial state, with the development
/// boundary after which summaries and growth checks apply.
struct StatsSeries {
    StepStats initial;             // step 0
    std::vector<StepStats> steps;  // steps 1..N in order
    std::vector<double> spread;    // aligned with steps; NaN where not evaluated
    int discard_n = 0;             // summaries cover steps > discard_n only
};

enum class Measure { Mass, Speed, Angle, AngularVelocity, Color };
enum class Aggregator { Mean, Variance };

/// Aggregates one measure over the post-development steps (step > discard_n).
/// Variance is the population variance. The Angle measure aggregates the
/// unwrapped heading series (cumulative minimal differences), so a constant
/// heading near +-pi still has variance 0; its Mean is the circular mean of
/// the raw headings. Scalar measures return a 1-vector; Color returns one
/// entry per channel. Throws SeriesTooShortError with fewer than 2
/// post-development steps.
Eigen::VectorXd summarize(const StatsSeries& series, Measure measure, Aggregator aggregator);

/// All aggregates evaluation needs, computed in one pass.
struct SummaryStats {
    double mass_mean = 0.0;
    double mass_var = 0.0;
    double speed_mean = 0.0;
    double speed_var = 0.0;
    double angle_mean = 0.0;             // circular mean of headings
    double angle_var = 0.0;              // variance of the unwrapped heading series
    double angular_velocity_mean = 0.0;
    std::vector<double> color_mean;
};
SummaryStats summarize_all(const StatsSeries& series);

enum class DiscardReason { Evaporated, Exploded, TooSpread };
const char* to_string(DiscardReason reason);

/// Mass and spread limits applied after the development phase. Mass is
/// divided by mass_unit before comparison, so thresholds can be expressed in
/// resolution-independent units (the harness passes the squared kernel radius
/// unit); spread thresholds stay in site units.
struct GrowthConstraints {
    int discard_n = 50;
    double min_mass = 0.1;
    double max_mass = std::numeric_limits<double>::infinity();
    double max_spread = std::numeric_limits<double>::infinity();  // site units
    double mass_unit = 1.0;

    bool spread_check_enabled() const { return std::isfinite(max_spread); }

    void validate() const {
        if (discard_n < 0) throw ValidationError("GrowthConstraints: discard_n must be >= 0");
        if (!(min_mass >= 0.0)) throw ValidationError("GrowthConstraints: min_mass must be >= 0");
        if (!(max_mass >= min_mass))
            throw ValidationError("GrowthConstraints: max_mass must be >= min_mass");
        if (!(mass_unit > 0.0)) throw ValidationError("GrowthConstraints: mass_unit must be > 0");
    }
};

/// Scans the post-development steps in order; at each step flags a too-small
/// mass, then a too-large mass, then a too-large spread. Returns the first
/// violation, or nullopt to keep. A degenerate (zero-mass) step always counts
/// as evaporated. The spread check reads series.spread and skips NaN entries,
/// so the series producer must fill spread for checked steps when the check
/// is enabled.
std::optional<DiscardReason> growth_check(const StatsSeries& series,
                                          const GrowthConstraints& constraints);

}  // namespace leniaqd::measures

#endif  // LENIAQD_MEASURES_STATS_HPP
